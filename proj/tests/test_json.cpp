#include <doctest.h>

#include "qweyl/json_io.hpp"
#include "qweyl/rewrite.hpp"
#include "qweyl/verify.hpp"

using namespace qweyl;

TEST_CASE("normalize JSON is byte-identical across engines") {
  for (AlgebraId id :
       {AlgebraId::q_oscillator, AlgebraId::q_weyl, AlgebraId::h_weyl,
        AlgebraId::sl2}) {
    for (const ExponentSeq& A : exponent_grid(id, 2, 2)) {
      std::string oracle = ncpoly_json(normal_order(A.word())).dump();
      std::string closed = ncpoly_json(closed_form_normal_form(A)).dump();
      CHECK(oracle == closed);
    }
  }
}

TEST_CASE("documented JSON forms") {
  Word yx{AlgebraId::q_oscillator, {1, 0}};
  CHECK(ncpoly_json(normal_order(yx)).dump() ==
        "{\"terms\":[{\"exps\":[1,1],\"coeff\":\"q\"},"
        "{\"exps\":[0,0],\"coeff\":\"h\"}]}");

  ExponentSeq zx2(AlgebraId::q_weyl, {{0, 0, 1}, {2, 0, 0}});
  CHECK(coords_json(q_normal_coords(zx2)).dump() ==
        "{\"0\":\"1\",\"1\":\"1 + q\"}");

  ExponentSeq single(AlgebraId::q_weyl, {{1, 2, 1}});
  CHECK(coords_json(q_normal_coords(single)).dump() == "{\"\":\"1\"}");

  ExponentSeq hw(AlgebraId::h_weyl, {{0, 1, 0}, {1, 0, 0}});
  CHECK(coords_json(h_normal_coords(hw)).dump() ==
        "{\"0;0\":\"1\",\"1;0\":\"1\"}");

  ExponentSeq sl(AlgebraId::sl2, {{0, 1, 0}, {1, 0, 0}});
  CHECK(coords_json(sl2_normal_coords(sl)).dump() ==
        "{\"0;0;0;0\":\"1\",\"0;0;0;1\":\"-2\"}");

  Json err = error_json("parse", "unknown letter", 3);
  CHECK(err.dump() ==
        "{\"code\":\"parse\",\"message\":\"unknown letter\",\"position\":3}");
}
