#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qweyl/algebra.hpp"

namespace qweyl {

/// A Sym^n expression: a product of class terms, each class a bracketed
/// list of n words.
struct SymExpr {
  unsigned arity = 0;
  std::vector<std::vector<Word>> classes;
};

/// Parsed input: either a single word or a symmetric-power expression.
struct Expr {
  AlgebraId algebra;
  std::variant<Word, SymExpr> value;

  bool is_word() const { return std::holds_alternative<Word>(value); }
  const Word& word() const { return std::get<Word>(value); }
  const SymExpr& sym() const { return std::get<SymExpr>(value); }
};

/// Grammar:
///   word    := term+            term := letter ('^' uint)? | '1'
///   class   := '[' word (',' word)* ']'
///   symexpr := class ('*' class)*
/// Whitespace is insignificant. Errors carry the byte offset and the
/// expected tokens.
Expr parse(const std::string& src, AlgebraId algebra);

/// Canonical rendering; parse(render(e), e.algebra) == e.
std::string render(const Expr& e);
std::string render(const Word& w);

}  // namespace qweyl
