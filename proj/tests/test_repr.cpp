#include <doctest.h>

#include "qweyl/closed_forms.hpp"
#include "qweyl/repr.hpp"
#include "qweyl/rewrite.hpp"
#include "qweyl/verify.hpp"

using namespace qweyl;

TEST_CASE("primitive operators on monomials") {
  PolySpaceElement x2 = UniPoly::x_power(2);

  UniPoly dq = std::get<UniPoly>(qweyl::apply(Prim::d_q, x2));
  UniPoly dq_expected;
  dq_expected.add_term(1, q_integer(2));
  CHECK(dq == dq_expected);

  UniPoly sh = std::get<UniPoly>(qweyl::apply(Prim::s_h, x2));
  UniPoly sh_expected;
  sh_expected.add_term(2, PolyQH(1));
  sh_expected.add_term(1, PolyQH(2) * PolyQH::h());
  sh_expected.add_term(0, PolyQH::h(2));
  CHECK(sh == sh_expected);

  PolySpaceElement x1x2 = BiPoly::monomial(1, 1);
  BiPoly y = std::get<BiPoly>(qweyl::apply(Prim::sl2_y, x1x2));
  CHECK(y.is_zero());

  CHECK_THROWS_AS(qweyl::apply(Prim::sl2_x, x2), Error);
  CHECK_THROWS_AS(qweyl::apply(Prim::d_q, x1x2), Error);
}

TEST_CASE("d_h expands the finite difference quotient") {
  PolySpaceElement x3 = UniPoly::x_power(3);
  UniPoly dh = std::get<UniPoly>(qweyl::apply(Prim::d_h, x3));
  UniPoly expected;  // 3x^2 + 3xh + h^2
  expected.add_term(2, PolyQH(3));
  expected.add_term(1, PolyQH(3) * PolyQH::h());
  expected.add_term(0, PolyQH::h(2));
  CHECK(dh == expected);
}

TEST_CASE("operator expressions compose right to left") {
  OperatorExpr hd{{OperatorExpr::Term{PolyQH(1), {Prim::mul_h, Prim::d_dx}}}};
  UniPoly r = std::get<UniPoly>(qweyl::apply(hd, UniPoly::x_power(4)));
  UniPoly expected;
  expected.add_term(3, PolyQH(4) * PolyQH::h());
  CHECK(r == expected);
}

TEST_CASE("representation propositions hold for every algebra") {
  for (AlgebraId id : kAllAlgebras) CHECK(verify_representation(id, 6));
  CHECK(verify_representation(AlgebraId::sl2, 5));
}

TEST_CASE("negative control: dropping q breaks the q-oscillator representation") {
  RewriteRule broken(AlgebraId::q_oscillator, 1, 0,
                     {{Word{AlgebraId::q_oscillator, {0, 1}}, PolyQH(1)},
                      {Word{AlgebraId::q_oscillator, {}}, PolyQH::h()}});
  CHECK_FALSE(verify_relation(broken, 4));
}

TEST_CASE("q-oscillator corollary identities") {
  CHECK(verify_corollary_qosc(1, {0}, {1}));
  CHECK(verify_corollary_qosc(3, {0, 1}, {1, 1}));
  CHECK(verify_corollary_qosc(0, {1, 2}, {2, 1}));
  CHECK(verify_corollary_qosc(0, {0}, {2}));
}

TEST_CASE("q-weyl corollary identities") {
  CHECK(verify_corollary_qweyl(2, {0}, {0}, {1}));
  CHECK(verify_corollary_qweyl(2, {0, 1}, {0, 0}, {1, 0}));
  CHECK(verify_corollary_qweyl(1, {0, 2}, {1, 0}, {1, 1}));
}

TEST_CASE("identity-check route equivalence") {
  // Applying the normal form to x^t equals applying the word letter by
  // letter; this is the mechanism behind both corollaries.
  for (AlgebraId id : {AlgebraId::q_oscillator, AlgebraId::q_weyl}) {
    auto grid = exponent_grid(id, 2, 2);
    for (std::size_t i = 0; i < grid.size(); i += 7) {
      Word w = grid[i].word();
      for (unsigned t = 0; t <= 5; ++t) {
        PolySpaceElement f = UniPoly::x_power(t);
        PolySpaceElement direct = apply_word(w, f);
        PolySpaceElement via_nf = apply_ncpoly(normal_order(w), f);
        CHECK(std::get<UniPoly>(direct) == std::get<UniPoly>(via_nf));
      }
    }
  }
}

TEST_CASE("classical limits of the deformed derivatives") {
  for (unsigned d = 0; d <= 8; ++d) {
    PolySpaceElement f = UniPoly::x_power(d);
    UniPoly classical = std::get<UniPoly>(qweyl::apply(Prim::d_dx, f));
    CHECK(std::get<UniPoly>(qweyl::apply(Prim::d_q, f)).at_q1() == classical);
    CHECK(std::get<UniPoly>(qweyl::apply(Prim::d_h, f)).at_h0() == classical);
  }
}
