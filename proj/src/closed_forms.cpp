#include "qweyl/closed_forms.hpp"

#include <algorithm>
#include <functional>

namespace qweyl {

ExponentSeq::ExponentSeq(AlgebraId algebra, std::vector<Exponents> factors)
    : algebra(algebra), factors(std::move(factors)) {
  if (this->factors.empty())
    throw Error("arity-mismatch", "exponent sequence needs at least one factor");
  for (const Exponents& f : this->factors)
    if (f.size() != letter_count(algebra))
      throw Error("arity-mismatch", "factor arity does not match algebra");
}

unsigned ExponentSeq::prefix_sum(unsigned letter, std::size_t upto) const {
  unsigned s = 0;
  for (std::size_t i = 0; i < upto; ++i) s += factors[i][letter];
  return s;
}

Word ExponentSeq::word() const {
  Word w{algebra, {}};
  for (const Exponents& f : factors)
    for (unsigned l = 0; l < f.size(); ++l)
      for (unsigned k = 0; k < f[l]; ++k)
        w.letters.push_back(static_cast<std::uint8_t>(l));
  return w;
}

CrossingMap CrossingMap::ground(const ExponentSeq& A) {
  CrossingMap m;
  unsigned pos = 0;
  for (std::size_t i = 0; i < A.n(); ++i) {
    for (unsigned k = 0; k < A.factors[i][0]; ++k) {
      m.u_block.push_back(static_cast<unsigned>(i));
      m.u_pos.push_back(pos++);
    }
    for (unsigned k = 0; k < A.factors[i][1]; ++k) {
      m.v_block.push_back(static_cast<unsigned>(i));
      m.v_pos.push_back(pos++);
    }
  }
  m.assignment.assign(m.v_block.size(), std::nullopt);
  return m;
}

std::size_t CrossingMap::matched_count() const {
  std::size_t k = 0;
  for (const auto& a : assignment) k += a.has_value();
  return k;
}

bool CrossingMap::valid() const {
  if (assignment.size() != v_block.size()) return false;
  std::vector<bool> used(u_block.size(), false);
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (!assignment[v]) continue;
    unsigned u = *assignment[v];
    if (u >= u_block.size()) return false;
    if (used[u]) return false;  // injectivity on p^{-1}(U)
    used[u] = true;
    if (v_block[v] >= u_block[u]) return false;  // block condition i < j
  }
  return true;
}

std::vector<CrossingMap> enumerate_crossing_maps(const ExponentSeq& A,
                                                 unsigned k) {
  CrossingMap base = CrossingMap::ground(A);
  std::vector<CrossingMap> out;
  const std::size_t nv = base.v_block.size();
  const std::size_t nu = base.u_block.size();
  std::vector<bool> used(nu, false);
  // Walk V in order, deciding for each element: unmatched, or matched to a
  // free U element in a strictly later block.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v,
                                                       unsigned left) {
    if (left > nv - v) return;  // not enough V elements remain
    if (v == nv) {
      if (left == 0) out.push_back(base);
      return;
    }
    base.assignment[v] = std::nullopt;
    rec(v + 1, left);
    if (left > 0) {
      for (std::size_t u = 0; u < nu; ++u) {
        if (used[u] || base.u_block[u] <= base.v_block[v]) continue;
        used[u] = true;
        base.assignment[v] = u;
        rec(v + 1, left - 1);
        base.assignment[v] = std::nullopt;
        used[u] = false;
      }
    }
  };
  rec(0, k);
  return out;
}

unsigned crossing_number(const CrossingMap& p) {
  unsigned count = 0;
  const std::size_t nv = p.v_block.size();
  const std::size_t nu = p.u_block.size();
  for (std::size_t s = 0; s < nv; ++s) {
    unsigned limit =
        p.assignment[s] ? p.u_pos[*p.assignment[s]] : ~0u;  // infinity
    for (std::size_t t = 0; t < nu; ++t) {
      if (p.u_pos[t] <= p.v_pos[s] || p.u_pos[t] >= limit) continue;
      bool imaged_by_later = false;
      for (std::size_t s2 = 0; s2 < nv && !imaged_by_later; ++s2)
        if (p.v_pos[s2] > p.v_pos[s] && p.assignment[s2] &&
            *p.assignment[s2] == t)
          imaged_by_later = true;
      if (!imaged_by_later) ++count;
    }
  }
  return count;
}

QOCoords qo_normal_coords(const ExponentSeq& A) {
  if (A.algebra != AlgebraId::q_oscillator)
    throw Error("unsupported", "qo_normal_coords requires the q-oscillator algebra");
  QOCoords coords;
  unsigned kmax = std::min(A.total(0), A.total(1));
  for (unsigned k = 0; k <= kmax; ++k) {
    PolyQH sum;
    for (const CrossingMap& p : enumerate_crossing_maps(A, k))
      sum += PolyQH::q(crossing_number(p));
    if (!sum.is_zero()) coords[k] = sum;
  }
  return coords;
}

namespace {

PolyQH qo_rec(std::vector<Exponents> factors, long k) {
  if (k < 0) return PolyQH();
  std::size_t start = 0;
  while (start < factors.size() && factors[start][0] == 0 &&
         factors[start][1] == 0)
    ++start;
  if (start > 0) factors.erase(factors.begin(), factors.begin() + start);
  if (factors.empty()) return k == 0 ? PolyQH(1) : PolyQH();

  if (factors.front()[0] > 0) {
    // Prepended x leaves every coordinate unchanged.
    --factors.front()[0];
    return qo_rec(std::move(factors), k);
  }
  // Prepended y: N((0,1)A', k) = q^(|a'|-k) N(A',k) + [|a'|-k+1] N(A',k-1).
  --factors.front()[1];
  unsigned asum = 0;
  for (const Exponents& f : factors) asum += f[0];
  PolyQH result;
  PolyQH same = qo_rec(factors, k);
  if (!same.is_zero()) result += PolyQH::q(asum - static_cast<unsigned>(k)) * same;
  PolyQH lower = qo_rec(std::move(factors), k - 1);
  if (!lower.is_zero())
    result += q_integer(asum - static_cast<unsigned>(k) + 1) * lower;
  return result;
}

}  // namespace

PolyQH qo_recursion_step(const ExponentSeq& A, unsigned k) {
  if (A.algebra != AlgebraId::q_oscillator)
    throw Error("unsupported", "qo_recursion_step requires the q-oscillator algebra");
  return qo_rec(A.factors, static_cast<long>(k));
}

PolyQH chi_k(unsigned a, unsigned k) {
  if (k > a) return PolyQH();
  PolyQH sum;
  std::vector<unsigned> subset(k);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned next,
                                                    unsigned chosen) {
    if (chosen == k) {
      // chi(I) = #{(i,j) : i > j, i in I, j in I^c}
      unsigned chi = 0;
      for (unsigned idx = 0; idx < k; ++idx)
        chi += subset[idx] - 1 - idx;  // elements below subset[idx] not in I
      sum += PolyQH::q(chi);
      return;
    }
    for (unsigned v = next; v + (k - chosen) <= a + 1 && v <= a; ++v) {
      subset[chosen] = v;
      rec(v + 1, chosen + 1);
    }
  };
  rec(1, 0);
  return sum;
}

namespace {

NormalMonomial mono3(AlgebraId id, unsigned a, unsigned b, unsigned c) {
  return monomial(id, Exponents{a, b, c});
}

// Enumerates vectors v of given length with components in [0, cap] and
// |v| <= total_cap, invoking fn on each.
void enumerate_vectors(unsigned length, unsigned cap, unsigned total_cap,
                       const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> v(length, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned used) {
    if (idx == length) {
      fn(v);
      return;
    }
    for (unsigned c = 0; c <= cap && used + c <= total_cap; ++c) {
      v[idx] = c;
      rec(idx + 1, used + c);
    }
  };
  rec(0, 0);
}

unsigned count_nonzero(const std::vector<unsigned>& v) {
  unsigned s = 0;
  for (unsigned c : v) s += c != 0;
  return s;
}

unsigned vec_sum(const std::vector<unsigned>& v) {
  unsigned s = 0;
  for (unsigned c : v) s += c;
  return s;
}

}  // namespace

NCPolynomial base_expand(AlgebraId algebra, char left, unsigned a, char right,
                         unsigned b) {
  if (algebra == AlgebraId::weyl || algebra == AlgebraId::q_oscillator)
    throw Error("unsupported",
                "base_expand covers q-weyl, h-weyl and sl2 only");
  unsigned li = letter_index(algebra, left);
  unsigned ri = letter_index(algebra, right);
  if (li <= ri)
    throw Error("unsupported", "base_expand requires an out-of-order pair");

  NCPolynomial out(algebra);
  const bool zx = (left == 'z' && right == 'x');
  const bool zy = (left == 'z' && right == 'y');
  // The remaining descent is yx.

  switch (algebra) {
    case AlgebraId::q_weyl: {
      if (zx) {
        for (unsigned k = 0; k <= std::min(a, b); ++k) {
          PolyQH c = chi_k(a, k) * q_falling(b, k);
          out.add_term(mono3(algebra, b - k, k, a - k), c);
        }
      } else if (zy) {
        out.add_term(mono3(algebra, 0, b, a), PolyQH::q(a * b));
      } else {
        out.add_term(mono3(algebra, b, a, 0), PolyQH::q(a * b));
      }
      break;
    }
    case AlgebraId::h_weyl: {
      if (zx) {
        for (unsigned k = 0; k <= b; ++k) {
          Rational c = Rational(binomial(b, k) * int_pow(a, k));
          out.add_term(mono3(algebra, b - k, 0, a),
                       PolyQH::monomial(c, 0, k));
        }
      } else if (zy) {
        out.add_term(mono3(algebra, 0, b, a), PolyQH(1));
      } else {
        // y^a x^b: one slot per y; a nonzero slot value turns that y into z.
        enumerate_vectors(a, b, b, [&](const std::vector<unsigned>& k) {
          std::vector<unsigned long> kl(k.begin(), k.end());
          Int c = multinomial(b, kl);
          if (c == 0) return;
          unsigned sk = count_nonzero(k);
          unsigned total = vec_sum(k);
          out.add_term(mono3(algebra, b - total, a - sk, sk),
                       PolyQH::monomial(Rational(c), 0, total - sk));
        });
      }
      break;
    }
    case AlgebraId::sl2: {
      if (zx) {
        for (unsigned k = 0; k <= std::min(a, b); ++k) {
          Int ab = binomial(a, k) * falling(b, k);  // (a)_k (b)_k / k!
          if (ab == 0) continue;
          for (unsigned s = 0; s <= k; ++s) {
            Int e = elem_sym(k - s, k, Int(-long(a) - long(b) + 2L * k));
            Int c = ab * e;
            if (c == 0) continue;
            out.add_term(mono3(algebra, b - k, s, a - k), PolyQH(Rational(c)));
          }
        }
      } else if (zy) {
        for (unsigned k = 0; k <= b; ++k) {
          Int c = binomial(b, k) * int_pow(Int(-2L * a), k);
          if (c == 0) continue;
          out.add_term(mono3(algebra, 0, b - k, a), PolyQH(Rational(c)));
        }
      } else {
        for (unsigned k = 0; k <= a; ++k) {
          Int c = binomial(a, k) * int_pow(Int(-2L * b), k);
          if (c == 0) continue;
          out.add_term(mono3(algebra, b, a - k, 0), PolyQH(Rational(c)));
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

QWeylCoords q_normal_coords(const ExponentSeq& A) {
  if (A.algebra != AlgebraId::q_weyl)
    throw Error("unsupported", "q_normal_coords requires the q-weyl algebra");
  const std::size_t n = A.n();
  QWeylCoords coords;
  std::vector<unsigned> k(n > 0 ? n - 1 : 0, 0);

  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned k_used) {
    if (i == n - 1) {
      // Complete vector: evaluate N_q(A,k).
      unsigned lambda = 0;
      PolyQH value(1);
      unsigned k_lt = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        unsigned c_le = A.prefix_sum(2, j + 1);
        unsigned b_le = A.prefix_sum(1, j + 1);
        unsigned a_next = A.factors[j + 1][0];
        unsigned b_next = A.factors[j + 1][1];
        unsigned k_le = k_lt + k[j];
        lambda += b_next * (c_le - k_le) + (a_next - k[j]) * (b_le + k_lt);
        value *= chi_k(c_le - k_lt, k[j]) * q_falling(a_next, k[j]);
        if (value.is_zero()) return;
        k_lt = k_le;
      }
      value = value.shifted(lambda, 0);
      coords[k] = std::move(value);
      return;
    }
    unsigned c_le = A.prefix_sum(2, i + 1);
    unsigned bound = std::min(c_le - k_used, A.factors[i + 1][0]);
    for (unsigned ki = 0; ki <= bound; ++ki) {
      k[i] = ki;
      rec(i + 1, k_used + ki);
    }
  };

  if (n == 1) {
    coords[{}] = PolyQH(1);
  } else {
    rec(0, 0);
  }
  return coords;
}

HWeylCoords h_normal_coords(const ExponentSeq& A) {
  if (A.algebra != AlgebraId::h_weyl)
    throw Error("unsupported", "h_normal_coords requires the h-weyl algebra");
  const std::size_t n = A.n();
  HWeylCoords coords;
  HWeylKey key;
  key.p.resize(n - 1);
  key.q.resize(n - 1);

  // Walk i = 1..n-1 choosing q_i then the vector p_i; carry the running
  // product and s(p_{<i}).
  std::function<void(std::size_t, unsigned, Rational)> rec =
      [&](std::size_t i, unsigned s_p_before, Rational acc) {
        if (i == n - 1) {
          coords[key] += acc;
          if (coords[key] == 0) coords.erase(key);
          return;
        }
        unsigned a_next = A.factors[i + 1][0];
        unsigned c_le = A.prefix_sum(2, i + 1);
        unsigned b_le = A.prefix_sum(1, i + 1);
        unsigned plen = b_le - s_p_before;
        for (unsigned qi = 0; qi <= a_next; ++qi) {
          Int qfac = binomial(a_next, qi);
          // (|c_{<=i}| + s(p_{<i}))^{q_i}; 0^0 = 1.
          Int base = Int(c_le + s_p_before);
          Int powfac = int_pow(base, qi);
          if (qfac == 0 || powfac == 0) continue;
          key.q[i] = qi;
          enumerate_vectors(
              plen, a_next, a_next - qi, [&](const std::vector<unsigned>& p) {
                std::vector<unsigned long> pl(p.begin(), p.end());
                Int mfac = multinomial(a_next - qi, pl);
                if (mfac == 0) return;
                key.p[i] = p;
                rec(i + 1, s_p_before + count_nonzero(p),
                    acc * Rational(qfac * powfac * mfac));
              });
        }
      };

  if (n == 1) {
    coords[key] = 1;
  } else {
    rec(0, 0, Rational(1));
  }
  return coords;
}

Sl2Coords sl2_normal_coords(const ExponentSeq& A) {
  if (A.algebra != AlgebraId::sl2)
    throw Error("unsupported", "sl2_normal_coords requires the sl2 algebra");
  const std::size_t n = A.n();
  Sl2Coords coords;
  Sl2Key key;
  key.k.resize(n - 1);
  key.s.resize(n - 1);
  key.p.resize(n - 1);
  key.q.resize(n - 1);

  std::function<void(std::size_t, unsigned, unsigned, Int)> rec =
      [&](std::size_t i, unsigned k_used, unsigned ybar, Int acc) {
        // ybar = |b_{<=i}| + |s_{<i}| - |p_{<i}| - |q_{<i}| at entry of step i.
        if (i == n - 1) {
          coords[key] += acc;
          if (coords[key] == 0) coords.erase(key);
          return;
        }
        unsigned a_next = A.factors[i + 1][0];
        unsigned b_next = A.factors[i + 1][1];
        unsigned c_le = A.prefix_sum(2, i + 1);
        unsigned cbar = c_le - k_used;
        unsigned kmax = std::min(cbar, a_next);
        for (unsigned ki = 0; ki <= kmax; ++ki) {
          Int alpha = binomial(cbar, ki) * falling(a_next, ki);
          if (alpha == 0) continue;
          key.k[i] = ki;
          for (unsigned si = 0; si <= ki; ++si) {
            Int beta = elem_sym(ki - si, ki,
                                Int(-long(a_next) - long(c_le) + long(k_used) +
                                    2L * ki));
            if (beta == 0) continue;
            key.s[i] = si;
            for (unsigned pi = 0; pi <= b_next; ++pi) {
              Int pfac = binomial(b_next, pi) *
                         int_pow(Int(-2L) * Int(cbar - ki), pi);
              if (pfac == 0) continue;
              key.p[i] = pi;
              for (unsigned qi = 0; qi <= ybar; ++qi) {
                Int qfac = binomial(Int(ybar), qi) *
                           int_pow(Int(-2L) * Int(a_next - ki), qi);
                if (qfac == 0) continue;
                key.q[i] = qi;
                rec(i + 1, k_used + ki, ybar + b_next + si - pi - qi,
                    acc * alpha * beta * pfac * qfac);
              }
            }
          }
        }
      };

  if (n == 1) {
    coords[key] = 1;
  } else {
    rec(0, 0, A.factors[0][1], Int(1));
  }
  return coords;
}

NCPolynomial reconstruct(const ExponentSeq& A, const QOCoords& coords) {
  NCPolynomial out(A.algebra);
  unsigned atot = A.total(0), btot = A.total(1);
  for (const auto& [k, c] : coords)
    out.add_term(monomial(A.algebra, {atot - k, btot - k}), c.shifted(0, k));
  return out;
}

NCPolynomial reconstruct(const ExponentSeq& A, const QWeylCoords& coords) {
  NCPolynomial out(A.algebra);
  unsigned atot = A.total(0), btot = A.total(1), ctot = A.total(2);
  for (const auto& [k, c] : coords) {
    unsigned ksum = vec_sum(k);
    out.add_term(mono3(A.algebra, atot - ksum, btot + ksum, ctot - ksum), c);
  }
  return out;
}

NCPolynomial reconstruct(const ExponentSeq& A, const HWeylCoords& coords) {
  NCPolynomial out(A.algebra);
  unsigned atot = A.total(0), btot = A.total(1), ctot = A.total(2);
  for (const auto& [key, c] : coords) {
    unsigned psum = 0, snz = 0;
    for (const auto& pj : key.p) {
      psum += vec_sum(pj);
      snz += count_nonzero(pj);
    }
    unsigned qsum = vec_sum(key.q);
    out.add_term(mono3(A.algebra, atot - psum - qsum, btot - snz, ctot + snz),
                 PolyQH::monomial(c, 0, qsum + psum - snz));
  }
  return out;
}

NCPolynomial reconstruct(const ExponentSeq& A, const Sl2Coords& coords) {
  NCPolynomial out(A.algebra);
  unsigned atot = A.total(0), btot = A.total(1), ctot = A.total(2);
  for (const auto& [key, c] : coords) {
    unsigned ksum = vec_sum(key.k), ssum = vec_sum(key.s);
    unsigned psum = vec_sum(key.p);
    unsigned qsum = vec_sum(key.q);
    out.add_term(mono3(A.algebra, atot - ksum, btot + ssum - psum - qsum,
                       ctot - ksum),
                 PolyQH(Rational(c)));
  }
  return out;
}

bool has_closed_form(AlgebraId id) { return id != AlgebraId::weyl; }

NCPolynomial closed_form_normal_form(const ExponentSeq& A) {
  switch (A.algebra) {
    case AlgebraId::q_oscillator:
      return reconstruct(A, qo_normal_coords(A));
    case AlgebraId::q_weyl:
      return reconstruct(A, q_normal_coords(A));
    case AlgebraId::h_weyl:
      return reconstruct(A, h_normal_coords(A));
    case AlgebraId::sl2:
      return reconstruct(A, sl2_normal_coords(A));
    case AlgebraId::weyl:
      break;
  }
  throw Error("unsupported", "the weyl algebra has no closed-form coordinates");
}

ExponentSeq factors_of_word(const Word& w) {
  std::vector<Exponents> factors;
  Exponents current(letter_count(w.algebra), 0);
  int last = -1;
  bool any = false;
  for (std::uint8_t l : w.letters) {
    if (any && l < last) {
      factors.push_back(current);
      current.assign(letter_count(w.algebra), 0);
    }
    ++current[l];
    last = l;
    any = true;
  }
  factors.push_back(current);
  return ExponentSeq(w.algebra, std::move(factors));
}

}  // namespace qweyl
