#include "qweyl/sym_power.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qweyl {

SymElement SymElement::unit(AlgebraId algebra, unsigned arity) {
  SymElement e(algebra, arity);
  e.add_term(Multiset(arity, unit_monomial(algebra)), PolyQH(1));
  return e;
}

SymElement SymElement::basis_class(const std::vector<NormalMonomial>& monomials) {
  if (monomials.empty())
    throw Error("arity-mismatch", "a basis class needs at least one monomial");
  SymElement e(monomials.front().algebra,
               static_cast<unsigned>(monomials.size()));
  e.add_term(monomials, PolyQH(1));
  return e;
}

void SymElement::add_term(Multiset tuple, const PolyQH& c) {
  if (tuple.size() != arity_)
    throw Error("arity-mismatch", "class size does not match arity");
  for (const NormalMonomial& m : tuple)
    if (m.algebra != algebra_)
      throw Error("algebra-mismatch", "class member algebra mismatch");
  if (c.is_zero()) return;
  std::sort(tuple.begin(), tuple.end());
  auto [it, inserted] = terms_.try_emplace(std::move(tuple), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& o) {
  if (o.algebra_ != algebra_ || o.arity_ != arity_)
    throw Error("algebra-mismatch", "sym addition requires same algebra and arity");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

SymElement& SymElement::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v.scale(c);
  return *this;
}

namespace {

NCPolynomial slot_normal_form(AlgebraId algebra,
                              const std::vector<const NormalMonomial*>& chain,
                              SlotEngine engine) {
  bool closed = engine == SlotEngine::closed_form ||
                (engine == SlotEngine::automatic && has_closed_form(algebra));
  if (closed) {
    std::vector<Exponents> factors;
    factors.reserve(chain.size());
    for (const NormalMonomial* m : chain) factors.push_back(m->exps);
    return closed_form_normal_form(ExponentSeq(algebra, std::move(factors)));
  }
  Word w{algebra, {}};
  for (const NormalMonomial* m : chain) {
    Word part = word_of(*m);
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  return normal_order(w);
}

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// One sigma-term: the class of the slotwise products of the chosen
// arrangements, accumulated into `out`.
void accumulate_sigma(AlgebraId algebra, unsigned n,
                      const std::vector<const SymElement::Multiset*>& tuples,
                      const std::vector<const std::vector<unsigned>*>& arrangement,
                      const PolyQH& base_coeff, SlotEngine engine,
                      SymElement& out) {
  const std::size_t m = tuples.size();
  std::vector<NCPolynomial> slots;
  slots.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<const NormalMonomial*> chain(m);
    for (std::size_t i = 0; i < m; ++i)
      chain[i] = &(*tuples[i])[(*arrangement[i])[j]];
    slots.push_back(slot_normal_form(algebra, chain, engine));
    if (slots.back().is_zero()) return;
  }
  // Expand the product of slot polynomials into class terms.
  SymElement::Multiset tuple(n, unit_monomial(algebra));
  std::vector<NCPolynomial::Terms::const_iterator> its(n);
  for (unsigned j = 0; j < n; ++j) its[j] = slots[j].terms().begin();
  while (true) {
    PolyQH coeff = base_coeff;
    for (unsigned j = 0; j < n; ++j) {
      tuple[j] = its[j]->first;
      coeff *= its[j]->second;
    }
    out.add_term(tuple, coeff);
    unsigned j = 0;
    for (; j < n; ++j) {
      if (++its[j] != slots[j].terms().end()) break;
      its[j] = slots[j].terms().begin();
    }
    if (j == n) break;
  }
}

}  // namespace

SymElement sym_product(AlgebraId algebra, unsigned arity,
                       const std::vector<SymElement>& factors,
                       const SymProductOptions& options) {
  for (const SymElement& f : factors)
    if (f.algebra() != algebra || f.arity() != arity)
      throw Error("algebra-mismatch",
                  "sym_product factors must share algebra and arity");
  if (factors.empty()) return SymElement::unit(algebra, arity);
  if (factors.size() == 1) return factors.front();

  const unsigned n = arity;
  const std::size_t m = factors.size();
  const auto perms = all_permutations(n);
  const unsigned long long nfact = perms.size();
  unsigned long long sigma_count = 1;
  for (std::size_t i = 1; i < m; ++i) {
    if (sigma_count > options.work_cap / nfact)
      throw Error("size-limit",
                  "permutation enumeration exceeds the configured work cap");
    sigma_count *= nfact;
  }

  Rational norm(1);
  norm /= Rational(Int(static_cast<unsigned long>(sigma_count)));

  SymElement result(algebra, n);
  // Bilinear extension: one term combination at a time.
  std::vector<SymElement::Terms::const_iterator> combo(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (factors[i].terms().empty()) return result;  // zero factor
    combo[i] = factors[i].terms().begin();
  }
  const auto& identity = perms.front();

  while (true) {
    PolyQH base(1);
    std::vector<const SymElement::Multiset*> tuples(m);
    for (std::size_t i = 0; i < m; ++i) {
      tuples[i] = &combo[i]->first;
      base *= combo[i]->second;
    }
    base.scale(norm);

    const long long total = static_cast<long long>(sigma_count);
#ifdef _OPENMP
    if (options.parallel && total >= 64) {
      std::vector<SymElement> partial;
      #pragma omp parallel
      {
        #pragma omp single
        partial.assign(static_cast<std::size_t>(omp_get_num_threads()),
                       SymElement(algebra, n));
        SymElement& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
        #pragma omp for schedule(dynamic, 16)
        for (long long w = 0; w < total; ++w) {
          std::vector<const std::vector<unsigned>*> arrangement(m, &identity);
          unsigned long long rest = static_cast<unsigned long long>(w);
          for (std::size_t i = 1; i < m; ++i) {
            arrangement[i] = &perms[rest % nfact];
            rest /= nfact;
          }
          accumulate_sigma(algebra, n, tuples, arrangement, base,
                           options.engine, mine);
        }
      }
      for (SymElement& p : partial) result += p;
    } else
#endif
    {
      for (long long w = 0; w < total; ++w) {
        std::vector<const std::vector<unsigned>*> arrangement(m, &identity);
        unsigned long long rest = static_cast<unsigned long long>(w);
        for (std::size_t i = 1; i < m; ++i) {
          arrangement[i] = &perms[rest % nfact];
          rest /= nfact;
        }
        accumulate_sigma(algebra, n, tuples, arrangement, base, options.engine,
                         result);
      }
    }

    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++combo[i] != factors[i].terms().end()) break;
      combo[i] = factors[i].terms().begin();
    }
    if (i == m) break;
  }
  return result;
}

TensorElement to_invariants(const SymElement& e) {
  TensorElement out(e.algebra(), e.arity());
  for (const auto& [tuple, c] : e.terms()) {
    TensorElement part = symmetrize(tuple);
    for (const auto& [t, pc] : part.terms()) out.add_term(t, pc * c);
  }
  return out;
}

SymElement from_invariants(const TensorElement& t) {
  if (!t.is_symmetric())
    throw Error("not-invariant",
                "from_invariants requires a slot-permutation invariant tensor");
  SymElement out(t.algebra(), t.arity());
  const Rational nfact(factorial(t.arity()));
  for (const auto& [tuple, c] : t.terms()) {
    if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
    // Stabilizer size of the sorted tuple: product of multiplicities'.
    Rational stab(1);
    std::size_t run = 1;
    for (std::size_t i = 1; i <= tuple.size(); ++i) {
      if (i < tuple.size() && tuple[i] == tuple[i - 1]) {
        ++run;
        stab *= Rational(Int(run));
      } else {
        run = 1;
      }
    }
    PolyQH coeff = c;
    coeff.scale(nfact / stab);
    out.add_term(tuple, coeff);
  }
  return out;
}

}  // namespace qweyl
