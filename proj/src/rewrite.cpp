#include "qweyl/rewrite.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace qweyl {

namespace {

// Short normal forms recur constantly across calls (tails of grid words,
// slot products); they are small and worth keeping. Longer intermediate
// words are cached per invocation only, which bounds memory.
constexpr std::size_t kSharedMemoMaxLen = 12;
constexpr std::size_t kSharedMemoMaxEntries = 400000;

using Memo = std::unordered_map<std::string, NCPolynomial>;

Memo& shared_memo(AlgebraId id) {
  thread_local std::array<Memo, 5> memo;
  return memo[static_cast<std::size_t>(id)];
}

std::string memo_key(const Word& w) {
  return std::string(w.letters.begin(), w.letters.end());
}

std::optional<std::size_t> find_descent(const Word& w, Strategy strategy) {
  if (strategy == Strategy::leftmost) {
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
      if (w.letters[i] > w.letters[i + 1]) return i;
  } else {
    for (std::size_t i = w.letters.size(); i-- > 1;)
      if (w.letters[i - 1] > w.letters[i]) return i - 1;
  }
  return std::nullopt;
}

Word splice(const Word& w, std::size_t pos, const Word& replacement) {
  Word out{w.algebra, {}};
  out.letters.reserve(w.letters.size() - 2 + replacement.letters.size());
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
  out.letters.insert(out.letters.end(), replacement.letters.begin(),
                     replacement.letters.end());
  out.letters.insert(out.letters.end(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 2,
                     w.letters.end());
  return out;
}

NormalMonomial monomial_of_sorted(const Word& w) {
  Exponents exps(letter_count(w.algebra), 0);
  for (std::uint8_t l : w.letters) ++exps[l];
  return NormalMonomial{w.algebra, exps};
}

NCPolynomial normal_order_impl(const Word& w, Strategy strategy, Memo& local) {
  auto pos = find_descent(w, strategy);
  if (!pos) return NCPolynomial::from_monomial(monomial_of_sorted(w));

  const bool use_shared = strategy == Strategy::leftmost;
  std::string key = memo_key(w);
  if (use_shared) {
    Memo& shared = shared_memo(w.algebra);
    if (auto it = shared.find(key); it != shared.end()) return it->second;
  }
  if (auto it = local.find(key); it != local.end()) return it->second;

  const RewriteRule& rule =
      rule_for(w.algebra, w.letters[*pos], w.letters[*pos + 1]);
  NCPolynomial result(w.algebra);
  for (const auto& [replacement, coeff] : rule.rhs) {
    NCPolynomial part =
        normal_order_impl(splice(w, *pos, replacement), strategy, local);
    result += coeff * std::move(part);
  }

  if (use_shared && w.letters.size() <= kSharedMemoMaxLen) {
    Memo& shared = shared_memo(w.algebra);
    if (shared.size() < kSharedMemoMaxEntries) shared.emplace(std::move(key), result);
  } else {
    local.emplace(std::move(key), result);
  }
  return result;
}

}  // namespace

std::optional<std::vector<std::pair<Word, PolyQH>>> rewrite_step(
    const Word& w, Strategy strategy) {
  auto pos = find_descent(w, strategy);
  if (!pos) return std::nullopt;
  const RewriteRule& rule =
      rule_for(w.algebra, w.letters[*pos], w.letters[*pos + 1]);
  std::vector<std::pair<Word, PolyQH>> out;
  out.reserve(rule.rhs.size());
  for (const auto& [replacement, coeff] : rule.rhs)
    out.emplace_back(splice(w, *pos, replacement), coeff);
  return out;
}

NCPolynomial normal_order(const Word& w, Strategy strategy) {
  Memo local;
  return normal_order_impl(w, strategy, local);
}

NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& r) {
  if (p.algebra() != r.algebra())
    throw Error("algebra-mismatch", "multiply requires matching algebras");
  NCPolynomial out(p.algebra());
  for (const auto& [mp, cp] : p.terms()) {
    Word wp = word_of(mp);
    for (const auto& [mr, cr] : r.terms()) {
      Word w = wp;
      Word wr = word_of(mr);
      w.letters.insert(w.letters.end(), wr.letters.begin(), wr.letters.end());
      out += (cp * cr) * normal_order(w);
    }
  }
  return out;
}

void TensorElement::add_term(const Tuple& tuple, const PolyQH& c) {
  if (tuple.size() != arity_)
    throw Error("arity-mismatch", "tensor tuple length does not match arity");
  for (const NormalMonomial& m : tuple)
    if (m.algebra != algebra_)
      throw Error("algebra-mismatch", "tensor slot algebra mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(tuple, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.algebra_ != algebra_ || o.arity_ != arity_)
    throw Error("algebra-mismatch", "tensor addition requires same algebra and arity");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TensorElement& TensorElement::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v.scale(c);
  return *this;
}

bool TensorElement::is_symmetric() const {
  for (const auto& [tuple, c] : terms_) {
    for (unsigned i = 0; i + 1 < arity_; ++i) {
      Tuple swapped = tuple;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms_.find(swapped);
      if (it == terms_.end() || it->second != c) return false;
    }
  }
  return true;
}

TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t) {
  if (s.algebra() != t.algebra() || s.arity() != t.arity())
    throw Error("algebra-mismatch", "tensor product requires same algebra and arity");
  const unsigned n = s.arity();
  TensorElement out(s.algebra(), n);
  for (const auto& [ts, cs] : s.terms()) {
    for (const auto& [tt, ct] : t.terms()) {
      // Componentwise slot products, then expand the product of sums.
      std::vector<NCPolynomial> slots;
      slots.reserve(n);
      bool zero = false;
      for (unsigned j = 0; j < n && !zero; ++j) {
        Word w = word_of(ts[j]);
        Word wr = word_of(tt[j]);
        w.letters.insert(w.letters.end(), wr.letters.begin(), wr.letters.end());
        slots.push_back(normal_order(w));
        zero = slots.back().is_zero();
      }
      if (zero) continue;
      TensorElement::Tuple tuple(n, unit_monomial(s.algebra()));
      PolyQH base = cs * ct;
      std::vector<NCPolynomial::Terms::const_iterator> its(n);
      for (unsigned j = 0; j < n; ++j) its[j] = slots[j].terms().begin();
      while (true) {
        PolyQH coeff = base;
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
  }
  return out;
}

TensorElement symmetrize(const std::vector<NormalMonomial>& tuple) {
  const unsigned n = static_cast<unsigned>(tuple.size());
  if (n == 0) throw Error("arity-mismatch", "cannot symmetrize an empty tuple");
  AlgebraId id = tuple.front().algebra;
  TensorElement out(id, n);
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  Rational factor(1);
  factor /= Rational(factorial(n));
  PolyQH coeff = PolyQH(factor);
  do {
    TensorElement::Tuple arranged(n, unit_monomial(id));
    for (unsigned i = 0; i < n; ++i) arranged[i] = tuple[perm[i]];
    out.add_term(arranged, coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void clear_normal_order_cache() {
  for (AlgebraId id : kAllAlgebras) shared_memo(id).clear();
}

}  // namespace qweyl
