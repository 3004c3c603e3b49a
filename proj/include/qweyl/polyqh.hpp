#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qweyl/rational.hpp"

namespace qweyl {

/// Exact sparse polynomial in the central parameters q and h with rational
/// coefficients. This is the coefficient ring of every algebra element.
/// Invariant: no stored coefficient is zero; the zero polynomial is the
/// empty map. Keys are (deg_q, deg_h), ordered lexicographically, which is
/// also the canonical serialization order.
class PolyQH {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using Terms = std::map<Key, Rational>;

  PolyQH() = default;
  PolyQH(long v) {  // NOLINT: implicit on purpose, scalars embed in the ring
    if (v != 0) terms_[{0, 0}] = v;
  }
  explicit PolyQH(const Rational& v) {
    if (v != 0) terms_[{0, 0}] = v;
  }
  explicit PolyQH(const Int& v) {
    if (v != 0) terms_[{0, 0}] = Rational(v);
  }

  static PolyQH monomial(const Rational& c, unsigned deg_q, unsigned deg_h) {
    PolyQH p;
    if (c != 0) p.terms_[{deg_q, deg_h}] = c;
    return p;
  }
  static PolyQH q(unsigned deg = 1) { return monomial(1, deg, 0); }
  static PolyQH h(unsigned deg = 1) { return monomial(1, 0, deg); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
  }
  const Terms& terms() const { return terms_; }

  bool operator==(const PolyQH& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolyQH& o) const { return terms_ != o.terms_; }

  PolyQH& operator+=(const PolyQH& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  PolyQH& operator-=(const PolyQH& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend PolyQH operator+(PolyQH a, const PolyQH& b) { return a += b; }
  friend PolyQH operator-(PolyQH a, const PolyQH& b) { return a -= b; }
  friend PolyQH operator-(const PolyQH& a) {
    PolyQH r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
  }

  friend PolyQH operator*(const PolyQH& a, const PolyQH& b) {
    PolyQH r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  PolyQH& operator*=(const PolyQH& o) { return *this = *this * o; }

  PolyQH& scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend PolyQH operator*(const Rational& c, PolyQH p) { return p.scale(c); }

  /// Multiply by q^dq * h^dh (exponent shift).
  PolyQH shifted(unsigned dq, unsigned dh) const {
    PolyQH r;
    for (const auto& [k, c] : terms_)
      r.terms_[{k.first + dq, k.second + dh}] = c;
    return r;
  }

  PolyQH pow(unsigned e) const {
    PolyQH r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Substitute q = 1; the result involves h only.
  PolyQH at_q1() const {
    PolyQH r;
    for (const auto& [k, c] : terms_) r.add_term({0, k.second}, c);
    return r;
  }
  /// Substitute h = 0.
  PolyQH at_h0() const {
    PolyQH r;
    for (const auto& [k, c] : terms_)
      if (k.second == 0) r.terms_[k] = c;
    return r;
  }

  unsigned deg_q() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }
  unsigned deg_h() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  /// The constant term as a rational (zero if absent).
  Rational constant() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Exact division by (q - 1). Throws if the division leaves a remainder.
  PolyQH divided_by_q_minus_1() const;

  /// Exact division by h. Throws if any term has h-degree zero.
  PolyQH divided_by_h() const;

  /// Canonical textual form: terms sorted by (deg_q, deg_h), each rendered
  /// c*q^a*h^b with unit factors elided, joined by " + ". Zero renders "0".
  std::string str() const;

 private:
  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// q-integer [n] = 1 + q + ... + q^(n-1).
PolyQH q_integer(unsigned n);

/// q-falling factorial [n]_k = [n][n-1]...[n-k+1]; zero when k > n.
PolyQH q_falling(unsigned n, unsigned k);

/// Gaussian binomial coefficient via the recursion
/// [a,k]_q = [a-1,k-1]_q + q^k [a-1,k]_q; zero when k > a.
/// Kept independent of chi_k, which it cross-checks.
PolyQH gauss_binomial(unsigned a, unsigned k);

}  // namespace qweyl
