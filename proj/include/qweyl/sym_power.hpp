#pragma once

#include <vector>

#include "qweyl/closed_forms.hpp"
#include "qweyl/rewrite.hpp"

namespace qweyl {

/// How sym_product normal-orders the per-slot factor products.
enum class SlotEngine {
  automatic,    // closed form when the algebra has one, oracle otherwise
  closed_form,  // force the coordinate formulas (error for weyl)
  oracle        // force the rewrite engine
};

struct SymProductOptions {
  SlotEngine engine = SlotEngine::automatic;
  bool parallel = false;
  // Refuse products whose permutation enumeration (n!)^{m-1} exceeds this.
  unsigned long long work_cap = 1000000;
};

/// An element of Sym^n(A) on the orbit (multiset) basis: a linear
/// combination of multisets of n normal monomials. Keys are stored sorted
/// by the monomial total order.
class SymElement {
 public:
  using Multiset = std::vector<NormalMonomial>;  // sorted, length n
  using Terms = std::map<Multiset, PolyQH>;

  SymElement(AlgebraId algebra, unsigned arity)
      : algebra_(algebra), arity_(arity) {}

  static SymElement unit(AlgebraId algebra, unsigned arity);
  /// The basis class of the given monomials (any order), coefficient 1.
  static SymElement basis_class(const std::vector<NormalMonomial>& monomials);

  AlgebraId algebra() const { return algebra_; }
  unsigned arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Multiset tuple, const PolyQH& c);
  SymElement& operator+=(const SymElement& o);
  SymElement& scale(const Rational& c);

  friend bool operator==(const SymElement& a, const SymElement& b) {
    return a.algebra_ == b.algebra_ && a.arity_ == b.arity_ &&
           a.terms_ == b.terms_;
  }

 private:
  AlgebraId algebra_;
  unsigned arity_;
  Terms terms_;
};

/// Product of m elements of Sym^n(A): the sum over {id} x S_n^{m-1} of the
/// classes of slotwise products, divided by (n!)^{m-1} in exact rationals.
/// An empty factor list yields the unit class.
SymElement sym_product(AlgebraId algebra, unsigned arity,
                       const std::vector<SymElement>& factors,
                       const SymProductOptions& options = {});

/// The symmetrization isomorphism s into the invariant subalgebra.
TensorElement to_invariants(const SymElement& e);

/// Inverse of s; rejects tensors that are not slot-permutation invariant.
SymElement from_invariants(const TensorElement& t);

}  // namespace qweyl
