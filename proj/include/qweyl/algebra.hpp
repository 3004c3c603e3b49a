#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/polyqh.hpp"

namespace qweyl {

/// The five built-in finitely presented algebras. The central parameters q
/// and h are not letters; they live in the coefficient ring PolyQH.
enum class AlgebraId : std::uint8_t { weyl, q_oscillator, q_weyl, h_weyl, sl2 };

constexpr std::array<AlgebraId, 5> kAllAlgebras = {
    AlgebraId::weyl, AlgebraId::q_oscillator, AlgebraId::q_weyl,
    AlgebraId::h_weyl, AlgebraId::sl2};

const std::string& algebra_name(AlgebraId id);
AlgebraId algebra_from_name(const std::string& name);

/// Number of non-central letters (2 for weyl/q-oscillator, 3 otherwise).
unsigned letter_count(AlgebraId id);

/// Letter names in increasing order: x < y (< z).
char letter_name(AlgebraId id, unsigned index);

/// Index of a letter character, or throws for an unknown letter.
unsigned letter_index(AlgebraId id, char letter);

/// Additive weight of each letter plus the weight of the coefficient
/// parameter h, used by the grading-conservation checks.
struct Grading {
  std::array<int, 3> letter_weight;
  int h_weight;
};
const Grading& grading(AlgebraId id);

using Exponents = std::vector<unsigned>;

/// A normal basis element: ordered-exponent monomial over the algebra's
/// letters. Total order: graded lexicographic on the exponent vector.
struct NormalMonomial {
  AlgebraId algebra;
  Exponents exps;

  unsigned total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps) d += e;
    return d;
  }
  bool is_unit() const { return total_degree() == 0; }

  friend bool operator==(const NormalMonomial& a, const NormalMonomial& b) {
    return a.algebra == b.algebra && a.exps == b.exps;
  }
  friend bool operator<(const NormalMonomial& a, const NormalMonomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
  }
};

/// An arbitrary word in the algebra's letters (an element of the free
/// algebra before rewriting). Letters are stored as indices.
struct Word {
  AlgebraId algebra;
  std::vector<std::uint8_t> letters;

  std::size_t size() const { return letters.size(); }
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.algebra == b.algebra && a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters < b.letters;
  }
};

/// Number of out-of-order adjacent pairs relative to the letter order; the
/// second component of the termination measure (length, inversions).
unsigned inversions(const Word& w);

/// One oriented rewrite rule: the two-letter descent (hi, lo) with hi > lo
/// rewrites into a linear combination of replacement words. Construction
/// validates the termination witness: every replacement is strictly shorter,
/// or has equal length and strictly fewer inversions.
struct RewriteRule {
  AlgebraId algebra;
  std::uint8_t hi, lo;
  std::vector<std::pair<Word, PolyQH>> rhs;

  RewriteRule(AlgebraId algebra, std::uint8_t hi, std::uint8_t lo,
              std::vector<std::pair<Word, PolyQH>> rhs);
};

/// The complete oriented rule set of an algebra: exactly one rule per
/// out-of-order letter pair.
const std::vector<RewriteRule>& presentation(AlgebraId id);

/// The rule rewriting the adjacent pair (hi, lo), hi > lo.
const RewriteRule& rule_for(AlgebraId id, std::uint8_t hi, std::uint8_t lo);

NormalMonomial monomial(AlgebraId id, const Exponents& exps);
NormalMonomial unit_monomial(AlgebraId id);

/// Expand exponents in letter order: x^a y^b (z^c) as a word.
Word word_of(const NormalMonomial& m);

/// Finite linear combination of normal monomials over PolyQH — the normal
/// form of any element. Keys share the algebra id; zero coefficients are
/// never stored.
class NCPolynomial {
 public:
  struct MonoLess {
    bool operator()(const NormalMonomial& a, const NormalMonomial& b) const {
      return a < b;
    }
  };
  using Terms = std::map<NormalMonomial, PolyQH, MonoLess>;

  explicit NCPolynomial(AlgebraId id) : algebra_(id) {}

  static NCPolynomial unit(AlgebraId id) {
    NCPolynomial p(id);
    p.add_term(unit_monomial(id), PolyQH(1));
    return p;
  }
  static NCPolynomial from_monomial(const NormalMonomial& m,
                                    PolyQH coeff = PolyQH(1)) {
    NCPolynomial p(m.algebra);
    p.add_term(m, std::move(coeff));
    return p;
  }

  AlgebraId algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const NormalMonomial& m, const PolyQH& c) {
    if (m.algebra != algebra_)
      throw Error("algebra-mismatch", "term algebra does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    if (o.algebra_ != algebra_)
      throw Error("algebra-mismatch", "cannot add across algebras");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) {
    return a += b;
  }

  NCPolynomial& scale(const PolyQH& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    Terms scaled;
    for (const auto& [m, v] : terms_) {
      PolyQH p = v * c;
      if (!p.is_zero()) scaled.emplace(m, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
  }
  friend NCPolynomial operator*(const PolyQH& c, NCPolynomial p) {
    return p.scale(c);
  }

  /// Rebuild the term map, pruning zeros. The representation is kept
  /// canonical by construction, so this is idempotent.
  NCPolynomial canonicalized() const {
    NCPolynomial r(algebra_);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  /// Substitute q = 1 in every coefficient.
  NCPolynomial at_q1() const {
    NCPolynomial r(algebra_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.at_q1());
    return r;
  }

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  AlgebraId algebra_;
  Terms terms_;
};

}  // namespace qweyl
