#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qweyl/algebra.hpp"

namespace qweyl {

/// Reduction strategies. Normal forms agree (the rule sets are confluent;
/// the test suite checks this), but keeping both lets the confluence test
/// compare genuinely different reduction orders.
enum class Strategy { leftmost, rightmost_innermost };

/// Applies one rule at the descent selected by the strategy. Returns nullopt
/// when the word is already normally ordered. Every returned word strictly
/// decreases the (length, inversions) measure — the termination witness.
std::optional<std::vector<std::pair<Word, PolyQH>>> rewrite_step(
    const Word& w, Strategy strategy = Strategy::leftmost);

/// Normal-orders a word by exhaustive rule application: the ground-truth
/// oracle every closed form is tested against. Deterministic; exact.
/// Normal forms of subwords are memoized (thread-local for short words,
/// per-invocation otherwise).
NCPolynomial normal_order(const Word& w, Strategy strategy = Strategy::leftmost);

/// Bilinear product: concatenate per term pair and normal-order.
NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& r);

/// An element of A^(⊗n): linear combination of n-tuples of normal monomials.
class TensorElement {
 public:
  using Tuple = std::vector<NormalMonomial>;
  using Terms = std::map<Tuple, PolyQH>;

  TensorElement(AlgebraId algebra, unsigned arity)
      : algebra_(algebra), arity_(arity) {}

  static TensorElement unit(AlgebraId algebra, unsigned arity) {
    TensorElement t(algebra, arity);
    t.add_term(Tuple(arity, unit_monomial(algebra)), PolyQH(1));
    return t;
  }

  AlgebraId algebra() const { return algebra_; }
  unsigned arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Tuple& tuple, const PolyQH& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& scale(const Rational& c);

  /// Invariance under every adjacent slot transposition (hence under all of
  /// the symmetric group).
  bool is_symmetric() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.algebra_ == b.algebra_ && a.arity_ == b.arity_ &&
           a.terms_ == b.terms_;
  }

 private:
  AlgebraId algebra_;
  unsigned arity_;
  Terms terms_;
};

/// Componentwise product on A^(⊗n), bilinear over terms.
TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t);

/// The symmetrization map s: (1/n!) sum over all permutations of the tuple.
/// Exact rational coefficients, so s is literally an algebra homomorphism.
TensorElement symmetrize(const std::vector<NormalMonomial>& tuple);

/// Clears the thread-local normal-form cache (used by benchmarks to get
/// cold-cache timings).
void clear_normal_order_cache();

}  // namespace qweyl
