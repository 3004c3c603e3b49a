#include "qweyl/polyqh.hpp"

#include <sstream>
#include <stdexcept>

namespace qweyl {

PolyQH PolyQH::divided_by_q_minus_1() const {
  // Per fixed h-degree the terms form a univariate polynomial in q;
  // synthetic division by (q - 1) row by row, remainder must vanish.
  PolyQH r;
  std::map<unsigned, std::map<unsigned, Rational>> rows;
  for (const auto& [k, c] : terms_) rows[k.second][k.first] = c;
  for (const auto& [dh, row] : rows) {
    unsigned deg = row.rbegin()->first;
    std::vector<Rational> coeffs(deg + 1, Rational(0));
    for (const auto& [dq, c] : row) coeffs[dq] = c;
    Rational carry(0);
    for (unsigned i = deg; i >= 1; --i) {
      carry += coeffs[i];
      if (carry != 0) r.terms_[{i - 1, dh}] = carry;
    }
    carry += coeffs[0];
    if (carry != 0)
      throw std::domain_error("PolyQH: not divisible by (q - 1)");
  }
  return r;
}

PolyQH PolyQH::divided_by_h() const {
  PolyQH r;
  for (const auto& [k, c] : terms_) {
    if (k.second == 0) throw std::domain_error("PolyQH: not divisible by h");
    r.terms_[{k.first, k.second - 1}] = c;
  }
  return r;
}

std::string PolyQH::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = k.first > 0 || k.second > 0;
    bool unit_coeff = (c == 1) && has_var;
    if (!unit_coeff) os << to_string(c);
    if (has_var && !unit_coeff) os << "*";
    if (k.first > 0) {
      os << "q";
      if (k.first > 1) os << "^" << k.first;
      if (k.second > 0) os << "*";
    }
    if (k.second > 0) {
      os << "h";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

PolyQH q_integer(unsigned n) {
  PolyQH r;
  for (unsigned i = 0; i < n; ++i) r += PolyQH::q(i);
  return r;
}

PolyQH q_falling(unsigned n, unsigned k) {
  PolyQH r(1);
  for (unsigned i = 0; i < k; ++i) {
    if (i > n) return PolyQH();  // a factor [negative] cannot occur: [0] hit first
    r *= q_integer(n - i);
    if (r.is_zero()) return r;
  }
  return r;
}

PolyQH gauss_binomial(unsigned a, unsigned k) {
  if (k > a) return PolyQH();
  // DP over the recursion; row[j] holds [i choose j]_q after pass i.
  std::vector<PolyQH> row(k + 1);
  row[0] = PolyQH(1);
  for (unsigned i = 1; i <= a; ++i)
    for (unsigned j = std::min(i, k); j >= 1; --j)
      row[j] = row[j - 1] + PolyQH::q(j) * row[j];
  return row[k];
}

}  // namespace qweyl
