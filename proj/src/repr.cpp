#include "qweyl/repr.hpp"

#include "qweyl/closed_forms.hpp"

namespace qweyl {

UniPoly& UniPoly::scale(const PolyQH& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms scaled;
  for (const auto& [d, v] : terms_) {
    PolyQH p = v * c;
    if (!p.is_zero()) scaled.emplace(d, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

UniPoly UniPoly::at_q1() const {
  UniPoly r;
  for (const auto& [d, c] : terms_) r.add_term(d, c.at_q1());
  return r;
}

UniPoly UniPoly::at_h0() const {
  UniPoly r;
  for (const auto& [d, c] : terms_) r.add_term(d, c.at_h0());
  return r;
}

BiPoly& BiPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

namespace {

UniPoly apply_uni(Prim p, const UniPoly& f) {
  UniPoly r;
  switch (p) {
    case Prim::x_mult:
      for (const auto& [d, c] : f.terms()) r.add_term(d + 1, c);
      return r;
    case Prim::mul_q:
      for (const auto& [d, c] : f.terms()) r.add_term(d, c.shifted(1, 0));
      return r;
    case Prim::mul_h:
      for (const auto& [d, c] : f.terms()) r.add_term(d, c.shifted(0, 1));
      return r;
    case Prim::d_dx:
      for (const auto& [d, c] : f.terms())
        if (d > 0) r.add_term(d - 1, PolyQH(long(d)) * c);
      return r;
    case Prim::s_q:
      for (const auto& [d, c] : f.terms()) r.add_term(d, c.shifted(d, 0));
      return r;
    case Prim::d_q: {
      // (f(qx) - f(x)) / ((q-1)x): the difference is divided exactly, row
      // by row; divisibility is asserted by divided_by_q_minus_1.
      for (const auto& [d, c] : f.terms()) {
        PolyQH diff = c.shifted(d, 0) - c;  // c (q^d - 1)
        if (diff.is_zero()) continue;       // d = 0 row drops here
        r.add_term(d - 1, diff.divided_by_q_minus_1());
      }
      return r;
    }
    case Prim::s_h: {
      for (const auto& [d, c] : f.terms())
        for (unsigned j = 0; j <= d; ++j)
          r.add_term(j, c.shifted(0, d - j) * PolyQH(Rational(binomial(d, j))));
      return r;
    }
    case Prim::d_h: {
      // In f(x+h) - f(x) the j = d binomial term cancels; every surviving
      // term carries h, so the division is exact.
      for (const auto& [d, c] : f.terms())
        for (unsigned j = 0; j + 1 <= d; ++j)
          r.add_term(j, (c.shifted(0, d - j) *
                         PolyQH(Rational(binomial(d, j)))).divided_by_h());
      return r;
    }
    default:
      throw Error("incompatible", "operator does not act on the univariate space");
  }
}

BiPoly apply_bi(Prim p, const BiPoly& f) {
  BiPoly r;
  switch (p) {
    case Prim::sl2_x:  // x2 d/dx1
      for (const auto& [k, c] : f.terms())
        if (k.first > 0)
          r.add_term({k.first - 1, k.second + 1}, c * Rational(long(k.first)));
      return r;
    case Prim::sl2_y:  // x1 d/dx1 - x2 d/dx2
      for (const auto& [k, c] : f.terms()) {
        long w = long(k.first) - long(k.second);
        if (w != 0) r.add_term(k, c * Rational(w));
      }
      return r;
    case Prim::sl2_z:  // x1 d/dx2
      for (const auto& [k, c] : f.terms())
        if (k.second > 0)
          r.add_term({k.first + 1, k.second - 1}, c * Rational(long(k.second)));
      return r;
    default:
      throw Error("incompatible", "operator does not act on the bivariate space");
  }
}

}  // namespace

PolySpaceElement apply(Prim p, const PolySpaceElement& f) {
  if (std::holds_alternative<UniPoly>(f))
    return apply_uni(p, std::get<UniPoly>(f));
  return apply_bi(p, std::get<BiPoly>(f));
}

PolySpaceElement apply(const OperatorExpr& op, const PolySpaceElement& f) {
  PolySpaceElement sum =
      std::holds_alternative<UniPoly>(f) ? PolySpaceElement(UniPoly())
                                         : PolySpaceElement(BiPoly());
  for (const OperatorExpr::Term& term : op.terms) {
    PolySpaceElement g = f;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it)
      g = qweyl::apply(*it, g);
    if (std::holds_alternative<UniPoly>(g)) {
      std::get<UniPoly>(g).scale(term.coeff);
      std::get<UniPoly>(sum) += std::get<UniPoly>(g);
    } else {
      if (!(term.coeff.deg_q() == 0 && term.coeff.deg_h() == 0))
        throw Error("incompatible",
                    "bivariate space admits constant coefficients only");
      std::get<BiPoly>(g).scale(term.coeff.constant());
      std::get<BiPoly>(sum) += std::get<BiPoly>(g);
    }
  }
  return sum;
}

OperatorExpr rep_letter(AlgebraId algebra, unsigned letter) {
  switch (algebra) {
    case AlgebraId::weyl:
      // rho(x) = x, rho(y) = h d/dx.
      if (letter == 0) return OperatorExpr::primitive(Prim::x_mult);
      return {{OperatorExpr::Term{PolyQH(1), {Prim::mul_h, Prim::d_dx}}}};
    case AlgebraId::q_oscillator:
      // rho(x) = x, rho(y) = h d_q.
      if (letter == 0) return OperatorExpr::primitive(Prim::x_mult);
      return {{OperatorExpr::Term{PolyQH(1), {Prim::mul_h, Prim::d_q}}}};
    case AlgebraId::q_weyl:
      // rho(x) = x, rho(y) = s_q, rho(z) = d_q.
      if (letter == 0) return OperatorExpr::primitive(Prim::x_mult);
      if (letter == 1) return OperatorExpr::primitive(Prim::s_q);
      return OperatorExpr::primitive(Prim::d_q);
    case AlgebraId::h_weyl:
      // rho(x) = x, rho(y) = d_h, rho(z) = s_h.
      if (letter == 0) return OperatorExpr::primitive(Prim::x_mult);
      if (letter == 1) return OperatorExpr::primitive(Prim::d_h);
      return OperatorExpr::primitive(Prim::s_h);
    case AlgebraId::sl2:
      if (letter == 0) return OperatorExpr::primitive(Prim::sl2_x);
      if (letter == 1) return OperatorExpr::primitive(Prim::sl2_y);
      return OperatorExpr::primitive(Prim::sl2_z);
  }
  throw Error("unknown-algebra", "unknown algebra id");
}

PolySpaceElement apply_word(const Word& w, const PolySpaceElement& f) {
  PolySpaceElement g = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    g = qweyl::apply(rep_letter(w.algebra, *it), g);
  return g;
}

PolySpaceElement apply_ncpoly(const NCPolynomial& p, const PolySpaceElement& f) {
  PolySpaceElement sum =
      std::holds_alternative<UniPoly>(f) ? PolySpaceElement(UniPoly())
                                         : PolySpaceElement(BiPoly());
  for (const auto& [m, c] : p.terms()) {
    PolySpaceElement g = apply_word(word_of(m), f);
    if (std::holds_alternative<UniPoly>(g)) {
      std::get<UniPoly>(g).scale(c);
      std::get<UniPoly>(sum) += std::get<UniPoly>(g);
    } else {
      if (!(c.deg_q() == 0 && c.deg_h() == 0))
        throw Error("incompatible",
                    "bivariate space admits constant coefficients only");
      std::get<BiPoly>(g).scale(c.constant());
      std::get<BiPoly>(sum) += std::get<BiPoly>(g);
    }
  }
  return sum;
}

std::vector<PolySpaceElement> space_basis(AlgebraId algebra,
                                          unsigned max_degree) {
  std::vector<PolySpaceElement> out;
  if (algebra == AlgebraId::sl2) {
    for (unsigned d = 0; d <= max_degree; ++d)
      for (unsigned i = 0; i <= d; ++i)
        out.emplace_back(BiPoly::monomial(i, d - i));
  } else {
    for (unsigned d = 0; d <= max_degree; ++d)
      out.emplace_back(UniPoly::x_power(d));
  }
  return out;
}

bool verify_relation(const RewriteRule& rule, unsigned max_degree) {
  Word lhs{rule.algebra, {rule.hi, rule.lo}};
  for (const PolySpaceElement& f : space_basis(rule.algebra, max_degree)) {
    PolySpaceElement left = apply_word(lhs, f);
    NCPolynomial rhs(rule.algebra);
    for (const auto& [w, c] : rule.rhs) {
      Exponents exps(letter_count(rule.algebra), 0);
      for (std::uint8_t l : w.letters) ++exps[l];
      rhs.add_term(NormalMonomial{rule.algebra, exps}, c);
    }
    PolySpaceElement right = apply_ncpoly(rhs, f);
    if (!(left == right)) return false;
  }
  return true;
}

bool verify_representation(AlgebraId algebra, unsigned max_degree) {
  for (const RewriteRule& rule : presentation(algebra))
    if (!verify_relation(rule, max_degree)) return false;
  return true;
}

bool verify_corollary_qosc(unsigned t, const std::vector<unsigned>& a,
                           const std::vector<unsigned>& b) {
  if (a.size() != b.size())
    throw Error("arity-mismatch", "corollary vectors must have equal length");
  const std::size_t n = a.size();
  if (n == 0) return true;  // both sides are the empty product

  PolyQH lhs(1);
  long s = long(t);
  for (std::size_t i = n; i-- > 0;) {
    // s = t + |a_{>i}| - |b_{>i}| stays nonnegative while factors are nonzero
    lhs *= q_falling(unsigned(s), b[i]);
    if (lhs.is_zero()) break;
    s += long(a[i]) - long(b[i]);
  }

  std::vector<Exponents> factors;
  factors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) factors.push_back({a[i], b[i]});
  ExponentSeq A(AlgebraId::q_oscillator, std::move(factors));
  unsigned btot = A.total(1);
  PolyQH rhs;
  for (const auto& [k, coeff] : qo_normal_coords(A)) {
    PolyQH fall = q_falling(t, btot - k);
    if (fall.is_zero()) continue;
    rhs += coeff * fall;
  }
  return lhs == rhs;
}

bool verify_corollary_qweyl(unsigned t, const std::vector<unsigned>& a,
                            const std::vector<unsigned>& b,
                            const std::vector<unsigned>& c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw Error("arity-mismatch", "corollary vectors must have equal length");
  const std::size_t n = a.size();
  if (n == 0) return true;

  PolyQH lhs(1);
  long s = long(t);
  for (std::size_t i = n; i-- > 0;) {
    // s = t + |a_{>i}| - |c_{>i}|; gamma(i) = b_i (s - c_i).
    PolyQH fall = q_falling(unsigned(s), c[i]);
    if (fall.is_zero()) {
      lhs = PolyQH();
      break;
    }
    lhs *= fall.shifted(b[i] * (unsigned(s) - c[i]), 0);
    s += long(a[i]) - long(c[i]);
  }

  std::vector<Exponents> factors;
  factors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) factors.push_back({a[i], b[i], c[i]});
  ExponentSeq A(AlgebraId::q_weyl, std::move(factors));
  unsigned btot = A.total(1), ctot = A.total(2);
  PolyQH rhs;
  for (const auto& [k, coeff] : q_normal_coords(A)) {
    unsigned ksum = 0;
    for (unsigned ki : k) ksum += ki;
    if (ctot - ksum > t) continue;  // [t]_{|c|-|k|} vanishes
    PolyQH fall = q_falling(t, ctot - ksum);
    if (fall.is_zero()) continue;
    unsigned beta_extra = (btot + ksum) * (t - ctot + ksum);
    rhs += coeff * fall.shifted(beta_extra, 0);
  }
  return lhs == rhs;
}

}  // namespace qweyl
