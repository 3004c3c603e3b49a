#pragma once

#include <map>
#include <variant>
#include <vector>

#include "qweyl/algebra.hpp"

namespace qweyl {

/// Exact univariate polynomial in x with PolyQH coefficients; the substrate
/// of the weyl, q-oscillator, q-weyl and h-weyl representations.
class UniPoly {
 public:
  using Terms = std::map<unsigned, PolyQH>;  // x-degree -> coefficient

  UniPoly() = default;
  static UniPoly x_power(unsigned d) {
    UniPoly p;
    p.terms_[d] = PolyQH(1);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(unsigned deg, const PolyQH& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(deg, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  UniPoly& operator+=(const UniPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  UniPoly& scale(const PolyQH& c);

  /// Substitute q = 1 (resp. h = 0) in every coefficient.
  UniPoly at_q1() const;
  UniPoly at_h0() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Exact bivariate polynomial in x1, x2 with rational coefficients; the
/// substrate of the sl2 representation.
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using Terms = std::map<Key, Rational>;

  BiPoly() = default;
  static BiPoly monomial(unsigned d1, unsigned d2, const Rational& c = 1) {
    BiPoly p;
    if (c != 0) p.terms_[{d1, d2}] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BiPoly& scale(const Rational& c);

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

using PolySpaceElement = std::variant<UniPoly, BiPoly>;

/// Operator primitives on the polynomial spaces.
enum class Prim {
  x_mult,  // f -> x f
  mul_q,   // f -> q f
  mul_h,   // f -> h f
  d_dx,    // classical derivative
  d_q,     // (f(qx) - f(x)) / ((q-1)x), exact division
  s_q,     // f(x) -> f(qx)
  d_h,     // (f(x+h) - f(x)) / h, exact division
  s_h,     // f(x) -> f(x+h)
  sl2_x,   // x2 d/dx1
  sl2_y,   // x1 d/dx1 - x2 d/dx2
  sl2_z    // x1 d/dx2
};

/// Formal sum of scaled compositions of primitives. Factors compose right
/// to left: {A, B} applied to f is A(B(f)).
struct OperatorExpr {
  struct Term {
    PolyQH coeff;
    std::vector<Prim> factors;
  };
  std::vector<Term> terms;

  static OperatorExpr primitive(Prim p) { return {{Term{PolyQH(1), {p}}}}; }
};

PolySpaceElement apply(Prim p, const PolySpaceElement& f);
PolySpaceElement apply(const OperatorExpr& op, const PolySpaceElement& f);

/// The representing operator of one letter in the algebra's representation.
OperatorExpr rep_letter(AlgebraId algebra, unsigned letter);

/// rho(w): letters act right to left.
PolySpaceElement apply_word(const Word& w, const PolySpaceElement& f);

/// rho of a normal-form linear combination.
PolySpaceElement apply_ncpoly(const NCPolynomial& p, const PolySpaceElement& f);

/// Basis of the algebra's representation space up to the given total degree.
std::vector<PolySpaceElement> space_basis(AlgebraId algebra, unsigned max_degree);

/// Checks rho(lhs) == rho(rhs) on the whole basis, for one rewrite rule.
bool verify_relation(const RewriteRule& rule, unsigned max_degree);

/// True iff every defining relation of the algebra is respected by its
/// representation on all basis elements up to max_degree.
bool verify_representation(AlgebraId algebra, unsigned max_degree);

/// The q-oscillator corollary: prod_i [t + |a_{>i}| - |b_{>i}|]_{b_i}
/// equals the double sum over k and P_k(U,V) of q^{c(p)} [t]_{|b|-k}.
bool verify_corollary_qosc(unsigned t, const std::vector<unsigned>& a,
                           const std::vector<unsigned>& b);

/// The q-Weyl corollary relating the gamma-twisted falling product to the
/// beta-twisted coordinate sum.
bool verify_corollary_qweyl(unsigned t, const std::vector<unsigned>& a,
                            const std::vector<unsigned>& b,
                            const std::vector<unsigned>& c);

}  // namespace qweyl
