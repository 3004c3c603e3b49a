#include <doctest.h>

#include "qweyl/sym_power.hpp"
#include "qweyl/verify.hpp"

using namespace qweyl;

// The OpenMP kernels must agree exactly with the serial reference loops:
// every sweep case is independent and merged by exact arithmetic.

TEST_CASE("sweep kernels: parallel equals serial") {
  VerifyBounds serial, parallel;
  serial.parallel = false;
  parallel.parallel = true;
  serial.max_factors = parallel.max_factors = 2;
  serial.max_arity = parallel.max_arity = 2;

  auto check = [&](SuiteResult (*fn)(const VerifyBounds&)) {
    SuiteResult s = fn(serial);
    SuiteResult p = fn(parallel);
    CHECK(s.pass == p.pass);
    CHECK(s.checked == p.checked);
    CHECK(s.counterexample.empty());
    CHECK(p.counterexample.empty());
  };
  check(criterion_qo_oracle_equivalence);
  check(criterion_tri_oracle_equivalence);
  check(criterion_qo_recursion);
  check(criterion_corollaries);
  check(criterion_sym_homomorphism);
  check(criterion_classical_limits);
}

TEST_CASE("sym_product: parallel sigma enumeration equals serial") {
  AlgebraId id = AlgebraId::q_oscillator;
  std::vector<NormalMonomial> tuple = {monomial(id, {1, 1}),
                                       monomial(id, {0, 1}),
                                       monomial(id, {1, 0})};
  SymElement a = SymElement::basis_class(tuple);
  std::vector<NormalMonomial> tuple2 = {monomial(id, {2, 0}),
                                        monomial(id, {0, 2}),
                                        unit_monomial(id)};
  SymElement b = SymElement::basis_class(tuple2);

  // (3!)^3 = 216 sigma vectors clears the parallel-dispatch threshold.
  SymProductOptions serial, parallel;
  serial.parallel = false;
  parallel.parallel = true;
  SymElement s = sym_product(id, 3, {a, b, a, b}, serial);
  SymElement p = sym_product(id, 3, {a, b, a, b}, parallel);
  CHECK(s == p);
  CHECK_FALSE(s.is_zero());
}

TEST_CASE("sl2 sweep: parallel equals serial including failure detection") {
  // Equality must also hold for the closed-form consistency sweep.
  VerifyBounds serial, parallel;
  serial.parallel = false;
  parallel.parallel = true;
  serial.max_arity = parallel.max_arity = 2;
  SuiteResult s = criterion_sym_closed_form(serial);
  SuiteResult p = criterion_sym_closed_form(parallel);
  CHECK(s.pass);
  CHECK(p.pass);
  CHECK(s.checked == p.checked);
}
