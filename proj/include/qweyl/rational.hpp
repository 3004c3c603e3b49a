#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qweyl {

// Exact scalar layer. All coefficients in the library are arbitrary-precision
// rationals; the combinatorial quantities below are the integer-valued scalars
// used by the closed-form normal-coordinate formulas.
using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(const Int& n, unsigned long k) {
  if (n >= 0 && Int(k) > n) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Classical falling factorial (a)_n = a(a-1)...(a-n+1).
inline Int falling(const Int& a, unsigned long n) {
  Int r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= a - Int(i);
  return r;
}

// Multinomial b!/(k_1!...k_m!(b-|k|)!), zero when |k| > b.
inline Int multinomial(unsigned long b, const std::vector<unsigned long>& k) {
  unsigned long total = 0;
  for (unsigned long ki : k) total += ki;
  if (total > b) return 0;
  Int r = factorial(b);
  for (unsigned long ki : k) r /= factorial(ki);
  r /= factorial(b - total);
  return r;
}

// Elementary symmetric polynomial e_s of the n values b, b-1, ..., b-n+1.
inline Int elem_sym(unsigned long s, unsigned long n, const Int& b) {
  if (s > n) throw std::invalid_argument("elem_sym: s > n");
  std::vector<Int> e(s + 1, 0);
  e[0] = 1;
  for (unsigned long i = 0; i < n; ++i) {
    Int v = b - Int(i);
    for (unsigned long j = std::min<unsigned long>(s, i + 1); j >= 1; --j)
      e[j] += v * e[j - 1];
  }
  return e[s];
}

}  // namespace qweyl
