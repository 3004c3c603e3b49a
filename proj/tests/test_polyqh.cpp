#include <doctest.h>

#include <random>

#include "qweyl/polyqh.hpp"

using namespace qweyl;

namespace {

PolyQH random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), deg(0, 6), coeff(-9, 9);
  PolyQH p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p += PolyQH::monomial(Rational(coeff(rng)), unsigned(deg(rng)),
                          unsigned(deg(rng)));
  return p;
}

// e_s^n(b, b-1, ..., b-n+1) with the out-of-range conventions the Newton
// recursion needs.
Int e_or_zero(long s, long n, const Int& b) {
  if (s < 0 || s > n) return 0;
  return elem_sym(unsigned(s), unsigned(n), b);
}

}  // namespace

TEST_CASE("q_integer basic values") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(1) == PolyQH(1));
  CHECK(q_integer(3) == PolyQH(1) + PolyQH::q(1) + PolyQH::q(2));
  CHECK(q_integer(3).str() == "1 + q + q^2");
}

TEST_CASE("q_falling basic values") {
  CHECK(q_falling(5, 0) == PolyQH(1));
  CHECK(q_falling(2, 1) == q_integer(2));
  CHECK(q_falling(2, 3).is_zero());
}

TEST_CASE("q_falling at q=1 is the classical falling factorial") {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      PolyQH specialized = q_falling(n, k).at_q1();
      CHECK(specialized == PolyQH(Rational(falling(Int(n), k))));
    }
}

TEST_CASE("falling factorial") {
  CHECK(falling(4, 0) == 1);
  CHECK(falling(4, 2) == 12);
  CHECK(falling(2, 3) == 0);
  CHECK(falling(-1, 2) == 2);
}

TEST_CASE("multinomial") {
  CHECK(multinomial(3, {}) == 1);
  CHECK(multinomial(2, {1, 1}) == 2);
  CHECK(multinomial(1, {2}) == 0);
}

TEST_CASE("single-component multinomial is the binomial coefficient") {
  for (unsigned long b = 0; b <= 12; ++b)
    for (unsigned long k = 0; k <= 12; ++k)
      CHECK(multinomial(b, {k}) == binomial(Int(b), k));
}

TEST_CASE("elem_sym basic values") {
  CHECK(elem_sym(0, 3, 7) == 1);
  CHECK(elem_sym(1, 2, 3) == 5);
  CHECK(elem_sym(1, 1, 0) == 0);
  CHECK_THROWS(elem_sym(4, 3, 2));
}

TEST_CASE("elem_sym satisfies the Newton recursion") {
  for (long n = 0; n <= 8; ++n)
    for (long s = 0; s <= n; ++s)
      for (long b = -8; b <= 8; ++b) {
        Int last = Int(b) - Int(n - 1);
        Int expected = e_or_zero(s, n - 1, b) + last * e_or_zero(s - 1, n - 1, b);
        if (n == 0) expected = (s == 0) ? 1 : 0;
        CHECK(elem_sym(unsigned(s), unsigned(n), b) == expected);
      }
}

TEST_CASE("gauss_binomial basic values") {
  CHECK(gauss_binomial(4, 0) == PolyQH(1));
  CHECK(gauss_binomial(2, 1) == q_integer(2));
  CHECK(gauss_binomial(1, 2).is_zero());
  // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
  PolyQH expected = PolyQH(1) + PolyQH::q(1) + PolyQH(2) * PolyQH::q(2) +
                    PolyQH::q(3) + PolyQH::q(4);
  CHECK(gauss_binomial(4, 2) == expected);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 100; ++i) {
    PolyQH a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + PolyQH() == a);
    CHECK(a * PolyQH(1) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("canonical rendering") {
  CHECK(PolyQH().str() == "0");
  CHECK(PolyQH(-2).str() == "-2");
  CHECK(PolyQH::monomial(Rational(1, 2), 1, 0).str() == "1/2*q");
  CHECK(PolyQH::monomial(1, 1, 2).str() == "q*h^2");
  CHECK((PolyQH(1) + PolyQH::monomial(-2, 1, 0)).str() == "1 + -2*q");
  CHECK(PolyQH::h().str() == "h");
}

TEST_CASE("substitutions") {
  PolyQH p = PolyQH(3) + PolyQH::monomial(2, 2, 1) + PolyQH::monomial(-1, 0, 1);
  CHECK(p.at_q1() == PolyQH(3) + PolyQH::monomial(1, 0, 1));
  CHECK(p.at_h0() == PolyQH(3));
}

TEST_CASE("exact division by (q-1) and by h") {
  PolyQH qm1 = PolyQH::q() - PolyQH(1);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    PolyQH p = random_poly(rng);
    CHECK((p * qm1).divided_by_q_minus_1() == p);
    CHECK((p * PolyQH::h()).divided_by_h() == p);
  }
  CHECK_THROWS((PolyQH::q() + PolyQH(1)).divided_by_q_minus_1());
  CHECK_THROWS(PolyQH(1).divided_by_h());
}
