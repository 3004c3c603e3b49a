// Compares the serial reference loops against the OpenMP kernels on the
// three enumeration-heavy workloads.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qweyl/rewrite.hpp"
#include "qweyl/sym_power.hpp"
#include "qweyl/verify.hpp"

namespace {

using qweyl::VerifyBounds;

double time_once(const std::function<void()>& fn) {
  qweyl::clear_normal_order_cache();
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const char* name, const std::function<void(bool)>& run) {
  double serial = time_once([&] { run(false); });
  double parallel = time_once([&] { run(true); });
  std::printf("%-36s %9.3fs %9.3fs %8.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-36s %10s %10s %9s\n", "workload", "serial", "parallel",
              "speedup");

  report("oracle-equivalence sweep (tri)", [](bool parallel) {
    VerifyBounds b;
    b.parallel = parallel;
    qweyl::SuiteResult r = qweyl::criterion_tri_oracle_equivalence(b);
    if (!r.pass) std::printf("  UNEXPECTED FAILURE\n");
  });

  report("sym closed-form consistency", [](bool parallel) {
    VerifyBounds b;
    b.parallel = parallel;
    qweyl::SuiteResult r = qweyl::criterion_sym_closed_form(b);
    if (!r.pass) std::printf("  UNEXPECTED FAILURE\n");
  });

  report("sym_product n=3 m=4 (216 sigmas)", [](bool parallel) {
    using namespace qweyl;
    AlgebraId id = AlgebraId::sl2;
    SymElement a = SymElement::basis_class({monomial(id, {1, 1, 0}),
                                            monomial(id, {0, 1, 1}),
                                            monomial(id, {1, 0, 1})});
    SymElement b = SymElement::basis_class({monomial(id, {2, 0, 0}),
                                            monomial(id, {0, 0, 2}),
                                            unit_monomial(id)});
    SymProductOptions options;
    options.parallel = parallel;
    for (int i = 0; i < 20; ++i)
      (void)sym_product(id, 3, {a, b, a, b}, options);
  });

  return 0;
}
