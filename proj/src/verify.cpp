#include "qweyl/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "qweyl/parser.hpp"
#include "qweyl/repr.hpp"
#include "qweyl/rewrite.hpp"

namespace qweyl {

namespace {

// Shared sweep kernel: evaluates one independent case per index. Cases are
// pure, so the OpenMP path and the serial reference path differ only in
// iteration order of the exact merge.
SuiteResult run_sweep(std::size_t count, bool parallel,
                      const std::function<std::string(std::size_t)>& check) {
  SuiteResult result;
  result.checked = count;
#ifdef _OPENMP
  if (parallel) {
    #pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      std::string failure = check(static_cast<std::size_t>(i));
      if (!failure.empty()) {
        #pragma omp critical
        {
          if (result.pass) {
            result.pass = false;
            result.counterexample = failure;
          }
        }
      }
    }
    return result;
  }
#endif
  (void)parallel;
  for (std::size_t i = 0; i < count; ++i) {
    std::string failure = check(i);
    if (!failure.empty()) {
      result.pass = false;
      result.counterexample = failure;
      return result;
    }
  }
  return result;
}

void enumerate_tuples(unsigned arity, unsigned max_exp,
                      const std::function<void(const Exponents&)>& fn) {
  Exponents t(arity, 0);
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == arity) {
      fn(t);
      return;
    }
    for (unsigned e = 0; e <= max_exp; ++e) {
      t[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
}

std::string describe(const ExponentSeq& A) {
  std::ostringstream os;
  os << algebra_name(A.algebra) << " A=";
  for (const Exponents& f : A.factors) {
    os << "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) os << ",";
      os << f[i];
    }
    os << ")";
  }
  return os.str();
}

std::string describe_class(const SymElement& e) {
  std::ostringstream os;
  os << "class[";
  bool first_t = true;
  for (const auto& [tuple, c] : e.terms()) {
    if (!first_t) os << " ; ";
    first_t = false;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) os << ",";
      os << render(word_of(tuple[i]));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

std::vector<ExponentSeq> exponent_grid(AlgebraId id, unsigned max_exp,
                                       unsigned max_factors) {
  std::vector<ExponentSeq> grid;
  std::vector<Exponents> tuples;
  enumerate_tuples(letter_count(id), max_exp,
                   [&](const Exponents& t) { tuples.push_back(t); });
  std::vector<Exponents> factors;
  std::function<void(unsigned)> rec = [&](unsigned remaining) {
    if (!factors.empty()) grid.emplace_back(id, factors);
    if (remaining == 0) return;
    for (const Exponents& t : tuples) {
      factors.push_back(t);
      rec(remaining - 1);
      factors.pop_back();
    }
  };
  rec(max_factors);
  return grid;
}

std::vector<SymElement> sym_class_family(AlgebraId id, unsigned arity,
                                         unsigned max_exp) {
  std::vector<NormalMonomial> pool;
  enumerate_tuples(letter_count(id), std::min(max_exp, 2u),
                   [&](const Exponents& t) {
                     unsigned total = 0;
                     for (unsigned e : t) total += e;
                     if (total <= 2) pool.push_back(monomial(id, t));
                   });

  std::vector<SymElement> family;
  std::vector<NormalMonomial> tuple;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (tuple.size() == arity) {
      family.push_back(SymElement::basis_class(tuple));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      tuple.push_back(pool[i]);
      rec(i);
      tuple.pop_back();
    }
  };
  rec(0);

  // The full-exponent monomial, padded with units.
  std::vector<NormalMonomial> extreme(arity, unit_monomial(id));
  extreme[0] = monomial(id, Exponents(letter_count(id), max_exp));
  family.push_back(SymElement::basis_class(extreme));
  return family;
}

SuiteResult criterion_qo_oracle_equivalence(const VerifyBounds& b) {
  auto grid =
      exponent_grid(AlgebraId::q_oscillator, b.max_exp, b.max_factors);
  return run_sweep(grid.size(), b.parallel, [&](std::size_t i) -> std::string {
    const ExponentSeq& A = grid[i];
    NCPolynomial closed = reconstruct(A, qo_normal_coords(A));
    NCPolynomial oracle = normal_order(A.word());
    if (closed == oracle) return {};
    return describe(A) + ": coordinate reconstruction differs from oracle";
  });
}

SuiteResult criterion_tri_oracle_equivalence(const VerifyBounds& b) {
  SuiteResult total;
  for (AlgebraId id :
       {AlgebraId::q_weyl, AlgebraId::h_weyl, AlgebraId::sl2}) {
    auto grid = exponent_grid(id, b.max_exp, b.max_factors);
    total += run_sweep(grid.size(), b.parallel,
                       [&](std::size_t i) -> std::string {
                         const ExponentSeq& A = grid[i];
                         NCPolynomial closed = closed_form_normal_form(A);
                         NCPolynomial oracle = normal_order(A.word());
                         if (closed == oracle) return {};
                         return describe(A) +
                                ": coordinate reconstruction differs from oracle";
                       });
    if (!total.pass) break;
  }
  return total;
}

SuiteResult criterion_chi_gauss(const VerifyBounds& b) {
  (void)b;
  SuiteResult result;
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned k = 0; k <= a; ++k) {
      ++result.checked;
      if (chi_k(a, k) == gauss_binomial(a, k)) continue;
      result.pass = false;
      std::ostringstream os;
      os << "chi_" << k << "(" << a << ") != gaussian binomial";
      result.counterexample = os.str();
      return result;
    }
  }
  return result;
}

SuiteResult criterion_qo_recursion(const VerifyBounds& b) {
  auto grid =
      exponent_grid(AlgebraId::q_oscillator, b.max_exp, b.max_factors);
  return run_sweep(grid.size(), b.parallel, [&](std::size_t i) -> std::string {
    const ExponentSeq& A = grid[i];
    QOCoords coords = qo_normal_coords(A);
    unsigned kmax = std::min(A.total(0), A.total(1));
    for (unsigned k = 0; k <= kmax + 1; ++k) {
      PolyQH expected;
      if (auto it = coords.find(k); it != coords.end()) expected = it->second;
      if (qo_recursion_step(A, k) != expected)
        return describe(A) + " k=" + std::to_string(k) +
               ": recursion differs from enumeration";
    }
    return {};
  });
}

SuiteResult suite_representations(const VerifyBounds& b) {
  SuiteResult result;
  for (AlgebraId id : kAllAlgebras) {
    std::size_t basis = space_basis(id, b.max_degree).size();
    for (const RewriteRule& rule : presentation(id)) {
      result.checked += basis;
      if (!verify_relation(rule, b.max_degree)) {
        result.pass = false;
        result.counterexample = algebra_name(id) + ": relation " +
                                std::string(1, letter_name(id, rule.hi)) +
                                std::string(1, letter_name(id, rule.lo)) +
                                " fails in the representation";
        return result;
      }
    }
  }
  return result;
}

SuiteResult criterion_representations(const VerifyBounds& b) {
  SuiteResult result = suite_representations(b);
  // Negative control: dropping the q from yx = qxy + h must fail.
  RewriteRule broken(AlgebraId::q_oscillator, 1, 0,
                     {{Word{AlgebraId::q_oscillator, {0, 1}}, PolyQH(1)},
                      {Word{AlgebraId::q_oscillator, {}}, PolyQH::h()}});
  ++result.checked;
  if (verify_relation(broken, b.max_degree)) {
    result.pass = false;
    result.counterexample =
        "negative control: q-less oscillator relation verified unexpectedly";
  }
  return result;
}

SuiteResult suite_corollaries(const VerifyBounds& b) {
  SuiteResult total;
  // q-oscillator corollary over (t, a, b).
  {
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> cases;
    for (unsigned n = 1; n <= b.max_corollary_len; ++n) {
      std::vector<std::vector<unsigned>> vectors;
      enumerate_tuples(n, b.max_exp, [&](const Exponents& v) {
        vectors.emplace_back(v.begin(), v.end());
      });
      for (const auto& a : vectors)
        for (const auto& bv : vectors) cases.emplace_back(a, bv);
    }
    total += run_sweep(
        cases.size() * (b.max_t + 1), b.parallel,
        [&](std::size_t i) -> std::string {
          unsigned t = static_cast<unsigned>(i % (b.max_t + 1));
          const auto& [a, bv] = cases[i / (b.max_t + 1)];
          if (verify_corollary_qosc(t, a, bv)) return {};
          std::ostringstream os;
          os << "q-oscillator corollary fails at t=" << t;
          return os.str();
        });
    if (!total.pass) return total;
  }
  // q-Weyl corollary over (t, a, b, c).
  {
    std::vector<std::array<std::vector<unsigned>, 3>> cases;
    for (unsigned n = 1; n <= b.max_corollary_len; ++n) {
      std::vector<std::vector<unsigned>> vectors;
      enumerate_tuples(n, b.max_exp, [&](const Exponents& v) {
        vectors.emplace_back(v.begin(), v.end());
      });
      for (const auto& a : vectors)
        for (const auto& bv : vectors)
          for (const auto& c : vectors)
            cases.push_back({a, bv, c});
    }
    total += run_sweep(
        cases.size() * (b.max_t + 1), b.parallel,
        [&](std::size_t i) -> std::string {
          unsigned t = static_cast<unsigned>(i % (b.max_t + 1));
          const auto& abc = cases[i / (b.max_t + 1)];
          if (verify_corollary_qweyl(t, abc[0], abc[1], abc[2])) return {};
          std::ostringstream os;
          os << "q-weyl corollary fails at t=" << t;
          return os.str();
        });
  }
  return total;
}

SuiteResult criterion_corollaries(const VerifyBounds& b) {
  return suite_corollaries(b);
}

SuiteResult criterion_sym_homomorphism(const VerifyBounds& b) {
  SuiteResult total;
  SymProductOptions options;
  for (AlgebraId id : kAllAlgebras) {
    for (unsigned n = 1; n <= b.max_arity; ++n) {
      auto family = sym_class_family(id, n, b.max_exp);
      const std::size_t fam = family.size();
      std::vector<TensorElement> images;
      images.reserve(fam);
      for (const SymElement& e : family) images.push_back(to_invariants(e));
      total += run_sweep(
          fam * fam, b.parallel, [&](std::size_t i) -> std::string {
            const SymElement& e = family[i / fam];
            const SymElement& f = family[i % fam];
            SymElement prod = sym_product(id, n, {e, f}, options);
            TensorElement lhs = to_invariants(prod);
            TensorElement rhs =
                tensor_multiply(images[i / fam], images[i % fam]);
            if (lhs == rhs) return {};
            return algebra_name(id) + " n=" + std::to_string(n) + " " +
                   describe_class(e) + " * " + describe_class(f) +
                   ": s is not multiplicative";
          });
      if (!total.pass) return total;

      // Three-factor associativity spot checks on a strided sample.
      std::size_t stride = std::max<std::size_t>(1, fam / 4);
      std::vector<std::array<std::size_t, 3>> triples;
      for (std::size_t i = 0; i < fam; i += stride)
        for (std::size_t j = 0; j < fam; j += stride)
          for (std::size_t k = 0; k < fam; k += stride)
            triples.push_back({i, j, k});
      total += run_sweep(
          triples.size(), b.parallel, [&](std::size_t w) -> std::string {
            const auto& [i, j, k] = triples[w];
            const SymElement &e = family[i], &f = family[j], &g = family[k];
            SymElement flat = sym_product(id, n, {e, f, g}, options);
            SymElement nested = sym_product(
                id, n, {sym_product(id, n, {e, f}, options), g}, options);
            if (flat == nested) return {};
            return algebra_name(id) + " n=" + std::to_string(n) +
                   ": associativity fails";
          });
      if (!total.pass) return total;
    }
  }
  return total;
}

SuiteResult criterion_sym_closed_form(const VerifyBounds& b) {
  SuiteResult total;
  SymProductOptions closed, oracle;
  closed.engine = SlotEngine::closed_form;
  oracle.engine = SlotEngine::oracle;
  for (AlgebraId id : kAllAlgebras) {
    if (!has_closed_form(id)) continue;
    for (unsigned n = 1; n <= b.max_arity; ++n) {
      auto family = sym_class_family(id, n, b.max_exp);
      const std::size_t fam = family.size();
      total += run_sweep(
          fam * fam, b.parallel, [&](std::size_t i) -> std::string {
            const SymElement& e = family[i / fam];
            const SymElement& f = family[i % fam];
            SymElement via_closed = sym_product(id, n, {e, f}, closed);
            SymElement via_oracle = sym_product(id, n, {e, f}, oracle);
            if (via_closed == via_oracle) return {};
            return algebra_name(id) + " n=" + std::to_string(n) + " " +
                   describe_class(e) + " * " + describe_class(f) +
                   ": closed-form and oracle slot products differ";
          });
      if (!total.pass) return total;
    }
  }
  return total;
}

SuiteResult criterion_classical_limits(const VerifyBounds& b) {
  SuiteResult total;
  // q = 1 specialization of q-oscillator normal forms matches the Weyl oracle.
  auto grid =
      exponent_grid(AlgebraId::q_oscillator, b.max_exp, b.max_factors);
  total += run_sweep(grid.size(), b.parallel, [&](std::size_t i) -> std::string {
    const ExponentSeq& A = grid[i];
    NCPolynomial qo = normal_order(A.word()).at_q1();
    Word weyl_word{AlgebraId::weyl, A.word().letters};
    NCPolynomial weyl = normal_order(weyl_word);
    if (qo.terms().size() != weyl.terms().size())
      return describe(A) + ": q=1 limit differs from the Weyl oracle";
    auto it = qo.terms().begin();
    auto jt = weyl.terms().begin();
    for (; it != qo.terms().end(); ++it, ++jt)
      if (it->first.exps != jt->first.exps || it->second != jt->second)
        return describe(A) + ": q=1 limit differs from the Weyl oracle";
    return {};
  });
  if (!total.pass) return total;

  // d_q at q=1 and d_h at h=0 reduce to the classical derivative.
  for (unsigned d = 0; d <= 8; ++d) {
    PolySpaceElement f = UniPoly::x_power(d);
    UniPoly classical = std::get<UniPoly>(qweyl::apply(Prim::d_dx, f));
    total.checked += 2;
    if (!(std::get<UniPoly>(qweyl::apply(Prim::d_q, f)).at_q1() == classical)) {
      total.pass = false;
      total.counterexample =
          "d_q at q=1 differs from d/dx on x^" + std::to_string(d);
      return total;
    }
    if (!(std::get<UniPoly>(qweyl::apply(Prim::d_h, f)).at_h0() == classical)) {
      total.pass = false;
      total.counterexample =
          "d_h at h=0 differs from d/dx on x^" + std::to_string(d);
      return total;
    }
  }
  return total;
}

SuiteResult suite_oracle_equiv(const VerifyBounds& b) {
  SuiteResult total;
  total += criterion_qo_oracle_equivalence(b);
  if (!total.pass) return total;
  total += criterion_tri_oracle_equivalence(b);
  if (!total.pass) return total;
  total += criterion_chi_gauss(b);
  if (!total.pass) return total;
  total += criterion_qo_recursion(b);
  return total;
}

SuiteResult suite_all(const VerifyBounds& b) {
  SuiteResult total;
  for (const CriterionResult& c : run_acceptance_criteria(b)) {
    total += c.result;
    if (!total.pass) break;
  }
  return total;
}

std::vector<CriterionResult> run_acceptance_criteria(const VerifyBounds& b) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, SuiteResult (*)(const VerifyBounds&)>>
      criteria = {
          {"oracle equivalence, q-oscillator", criterion_qo_oracle_equivalence},
          {"oracle equivalence, q-weyl/h-weyl/sl2", criterion_tri_oracle_equivalence},
          {"chi_k equals gaussian binomial", criterion_chi_gauss},
          {"recursion vs enumeration", criterion_qo_recursion},
          {"representation propositions", criterion_representations},
          {"corollary identities", criterion_corollaries},
          {"symmetrization homomorphism", criterion_sym_homomorphism},
          {"sym closed-form consistency", criterion_sym_closed_form},
          {"classical limits", criterion_classical_limits},
      };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const auto& [name, fn] : criteria) {
    auto start = Clock::now();
    SuiteResult r = fn(b);
    double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(CriterionResult{id++, name, std::move(r), seconds});
  }
  return out;
}

}  // namespace qweyl
