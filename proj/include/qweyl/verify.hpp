#pragma once

#include <string>
#include <vector>

#include "qweyl/closed_forms.hpp"
#include "qweyl/sym_power.hpp"

namespace qweyl {

struct VerifyBounds {
  unsigned max_exp = 2;           // per-letter exponent bound in grids
  unsigned max_factors = 3;       // factor count bound for coordinate grids
  unsigned max_arity = 3;         // Sym^n arity bound
  unsigned max_t = 5;             // corollary evaluation range
  unsigned max_corollary_len = 2; // corollary vector length bound
  unsigned max_degree = 6;        // representation basis degree
  bool parallel = true;           // OpenMP sweep kernels; false = serial reference
};

struct SuiteResult {
  bool pass = true;
  unsigned long long checked = 0;
  std::string counterexample;

  SuiteResult& operator+=(const SuiteResult& o) {
    checked += o.checked;
    if (!o.pass && pass) {
      pass = false;
      counterexample = o.counterexample;
    }
    return *this;
  }
};

/// All factor sequences with n <= max_factors factors and every exponent
/// <= max_exp, in a fixed deterministic order.
std::vector<ExponentSeq> exponent_grid(AlgebraId id, unsigned max_exp,
                                       unsigned max_factors);

/// The deterministic class family used by the Sym^n criteria: all size-n
/// multisets over the pool of monomials of total degree <= 2 (exponents
/// capped at max_exp), plus the class of the full-exponent monomial padded
/// with units.
std::vector<SymElement> sym_class_family(AlgebraId id, unsigned arity,
                                         unsigned max_exp);

// Acceptance criteria. Each runs an exhaustive exact sweep; `parallel`
// selects the OpenMP kernel, otherwise the serial reference loop.
SuiteResult criterion_qo_oracle_equivalence(const VerifyBounds& b);   // 1
SuiteResult criterion_tri_oracle_equivalence(const VerifyBounds& b); // 2
SuiteResult criterion_chi_gauss(const VerifyBounds& b);              // 3
SuiteResult criterion_qo_recursion(const VerifyBounds& b);           // 4
SuiteResult criterion_representations(const VerifyBounds& b);        // 5
SuiteResult criterion_corollaries(const VerifyBounds& b);            // 6
SuiteResult criterion_sym_homomorphism(const VerifyBounds& b);       // 7
SuiteResult criterion_sym_closed_form(const VerifyBounds& b);        // 8
SuiteResult criterion_classical_limits(const VerifyBounds& b);       // 9

// CLI-facing suites.
SuiteResult suite_representations(const VerifyBounds& b);  // positive checks only
SuiteResult suite_corollaries(const VerifyBounds& b);
SuiteResult suite_oracle_equiv(const VerifyBounds& b);     // criteria 1-4
SuiteResult suite_all(const VerifyBounds& b);              // criteria 1-9

struct CriterionResult {
  int id;
  std::string name;
  SuiteResult result;
  double seconds;
};

/// Runs criteria 1-9 in order (the selftest payload).
std::vector<CriterionResult> run_acceptance_criteria(const VerifyBounds& b);

}  // namespace qweyl
