#include <doctest.h>

#include "qweyl/algebra.hpp"
#include "qweyl/rewrite.hpp"

using namespace qweyl;

TEST_CASE("every out-of-order pair has exactly one rule") {
  for (AlgebraId id : kAllAlgebras) {
    unsigned letters = letter_count(id);
    for (unsigned hi = 0; hi < letters; ++hi) {
      for (unsigned lo = 0; lo < hi; ++lo) {
        unsigned matches = 0;
        for (const RewriteRule& r : presentation(id))
          if (r.hi == hi && r.lo == lo) ++matches;
        CHECK(matches == 1);
      }
    }
    CHECK(presentation(id).size() == letters * (letters - 1) / 2);
  }
}

TEST_CASE("termination witnesses validate") {
  for (AlgebraId id : kAllAlgebras) {
    for (const RewriteRule& rule : presentation(id)) {
      Word lhs{id, {rule.hi, rule.lo}};
      for (const auto& [replacement, coeff] : rule.rhs) {
        bool shorter = replacement.size() < lhs.size();
        bool fewer = replacement.size() == lhs.size() &&
                     inversions(replacement) < inversions(lhs);
        CHECK((shorter || fewer));
        CHECK_FALSE(coeff.is_zero());
      }
    }
  }
}

TEST_CASE("rules without a termination witness are rejected") {
  // yx -> yx is length-preserving with equal inversions.
  CHECK_THROWS_AS(RewriteRule(AlgebraId::weyl, 1, 0,
                              {{Word{AlgebraId::weyl, {1, 0}}, PolyQH(1)}}),
                  Error);
  // yx -> xyx grows.
  CHECK_THROWS_AS(RewriteRule(AlgebraId::weyl, 1, 0,
                              {{Word{AlgebraId::weyl, {0, 1, 0}}, PolyQH(1)}}),
                  Error);
}

TEST_CASE("defining relations match the presentations") {
  const auto& qo = presentation(AlgebraId::q_oscillator);
  REQUIRE(qo.size() == 1);
  CHECK(qo[0].rhs.size() == 2);
  CHECK(qo[0].rhs[0].first.str() == "xy");
  CHECK(qo[0].rhs[0].second == PolyQH::q());
  CHECK(qo[0].rhs[1].first.str() == "");
  CHECK(qo[0].rhs[1].second == PolyQH::h());

  const auto& qw = presentation(AlgebraId::q_weyl);
  REQUIRE(qw.size() == 3);
  CHECK(rule_for(AlgebraId::q_weyl, 2, 0).rhs.size() == 2);  // zx = xz + y
  CHECK(rule_for(AlgebraId::q_weyl, 1, 0).rhs.size() == 1);  // yx = q xy
  CHECK(rule_for(AlgebraId::q_weyl, 2, 1).rhs.size() == 1);  // zy = q yz

  const auto& sl = presentation(AlgebraId::sl2);
  REQUIRE(sl.size() == 3);
  CHECK(rule_for(AlgebraId::sl2, 1, 0).rhs[1].second == PolyQH(-2));
  CHECK(rule_for(AlgebraId::sl2, 2, 1).rhs[1].second == PolyQH(-2));
}

TEST_CASE("monomial and word_of") {
  NormalMonomial m = monomial(AlgebraId::q_weyl, {1, 0, 2});
  CHECK(word_of(m).str() == "xzz");
  CHECK(word_of(monomial(AlgebraId::q_oscillator, {0, 0})).letters.empty());
  CHECK(word_of(monomial(AlgebraId::sl2, {2, 1, 1})).str() == "xxyz");
  CHECK_THROWS_AS(monomial(AlgebraId::q_oscillator, {1, 2, 3}), Error);
}

TEST_CASE("word_of round-trips through normal_order") {
  for (AlgebraId id : kAllAlgebras) {
    Exponents exps(letter_count(id), 2);
    NormalMonomial m = monomial(id, exps);
    NCPolynomial nf = normal_order(word_of(m));
    REQUIRE(nf.size() == 1);
    CHECK(nf.terms().begin()->first == m);
    CHECK(nf.terms().begin()->second == PolyQH(1));
  }
}

TEST_CASE("monomial order is graded lexicographic") {
  NormalMonomial unit = monomial(AlgebraId::q_weyl, {0, 0, 0});
  NormalMonomial y = monomial(AlgebraId::q_weyl, {0, 1, 0});
  NormalMonomial x = monomial(AlgebraId::q_weyl, {1, 0, 0});
  NormalMonomial xy = monomial(AlgebraId::q_weyl, {1, 1, 0});
  CHECK(unit < y);
  CHECK(y < x);   // same grade, lexicographically smaller exponent vector
  CHECK(x < xy);  // lower grade first
}

TEST_CASE("NCPolynomial canonical form is idempotent and prunes zeros") {
  NCPolynomial p(AlgebraId::q_oscillator);
  NormalMonomial m = monomial(AlgebraId::q_oscillator, {1, 1});
  p.add_term(m, PolyQH::q());
  p.add_term(m, PolyQH(1));
  p.add_term(m, PolyQH(-1));
  CHECK(p.size() == 1);
  CHECK(p.terms().begin()->second == PolyQH::q());
  CHECK(p.canonicalized() == p);
  CHECK(p.canonicalized().canonicalized() == p.canonicalized());
  p.add_term(m, -PolyQH::q());
  CHECK(p.is_zero());
}

TEST_CASE("algebra names round-trip") {
  for (AlgebraId id : kAllAlgebras)
    CHECK(algebra_from_name(algebra_name(id)) == id);
  CHECK_THROWS_AS(algebra_from_name("heisenberg"), Error);
}
