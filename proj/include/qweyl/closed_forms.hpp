#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qweyl/algebra.hpp"
#include "qweyl/rewrite.hpp"

namespace qweyl {

/// A factor sequence (A_1,...,A_n) of exponent tuples: X^{A_i} = x^a y^b (z^c).
struct ExponentSeq {
  AlgebraId algebra;
  std::vector<Exponents> factors;

  ExponentSeq(AlgebraId algebra, std::vector<Exponents> factors);

  std::size_t n() const { return factors.size(); }
  /// Sum of the exponents of letter `letter` over factors [0, upto).
  unsigned prefix_sum(unsigned letter, std::size_t upto) const;
  unsigned total(unsigned letter) const { return prefix_sum(letter, factors.size()); }

  /// The concatenated word x^{a_1} y^{b_1} (z^{c_1}) x^{a_2} ...
  Word word() const;
};

/// A partial matching p in P_k(U,V): the ordered ground sets are determined
/// by the exponent pairs (|U_i| = a_i, |V_i| = b_i) interleaved in word
/// order, U_i before V_i within a block. Each V element is matched to a U
/// element in a strictly later block, or to infinity.
struct CrossingMap {
  std::vector<unsigned> u_block;  // block of each U element, in order
  std::vector<unsigned> v_block;  // block of each V element, in order
  std::vector<unsigned> u_pos;    // global word-order position of U elements
  std::vector<unsigned> v_pos;    // global word-order position of V elements
  std::vector<std::optional<unsigned>> assignment;  // V index -> U index or infinity

  /// Ground sets (with the all-infinity assignment) for a q-oscillator
  /// exponent sequence.
  static CrossingMap ground(const ExponentSeq& A);

  std::size_t matched_count() const;
  /// Checks injectivity on p^{-1}(U) and the block condition i < j.
  bool valid() const;
};

/// All maps in P_k(U,V) for the given exponent sequence.
std::vector<CrossingMap> enumerate_crossing_maps(const ExponentSeq& A, unsigned k);

/// The crossing number c(p): pairs (s,t) in V x U with s < t < p(s) such
/// that t is not the image of any V element greater than s.
unsigned crossing_number(const CrossingMap& p);

using QOCoords = std::map<unsigned, PolyQH>;

/// Normal coordinates of prod X^{A_i} in the q-oscillator algebra:
/// coordinate k carries sum over P_k(U,V) of q^{c(p)}. Zero values dropped.
QOCoords qo_normal_coords(const ExponentSeq& A);

/// The same coordinate N_qo(A,k), evaluated by the peel-one-letter
/// recursions instead of enumeration.
PolyQH qo_recursion_step(const ExponentSeq& A, unsigned k);

/// chi_k(a) = sum over k-subsets I of [[1,a]] of q^{chi(I)}, where chi(I)
/// counts pairs (i,j), i > j, i in I, j not in I.
PolyQH chi_k(unsigned a, unsigned k);

/// Closed-form expansion of left^a right^b for an out-of-order letter pair
/// of the q-Weyl, h-Weyl or sl2 algebra. Rejects in-order pairs and the
/// weyl / q-oscillator algebras.
NCPolynomial base_expand(AlgebraId algebra, char left, unsigned a, char right,
                         unsigned b);

using QWeylCoords = std::map<std::vector<unsigned>, PolyQH>;

/// Normal coordinates N_q(A,k), k in N^{n-1} admissible.
QWeylCoords q_normal_coords(const ExponentSeq& A);

struct HWeylKey {
  std::vector<std::vector<unsigned>> p;  // p_j has length |b_{<=j}| - s(p_{<j})
  std::vector<unsigned> q;               // 0 <= q_j <= a_{j+1}

  friend bool operator<(const HWeylKey& a, const HWeylKey& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
  friend bool operator==(const HWeylKey& a, const HWeylKey& b) {
    return a.p == b.p && a.q == b.q;
  }
};
using HWeylCoords = std::map<HWeylKey, Rational>;

/// Normal coordinates N_h(A,p,q).
HWeylCoords h_normal_coords(const ExponentSeq& A);

struct Sl2Key {
  std::vector<unsigned> k, s, p, q;  // each of length n-1

  friend bool operator<(const Sl2Key& a, const Sl2Key& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.s != b.s) return a.s < b.s;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
  friend bool operator==(const Sl2Key& a, const Sl2Key& b) {
    return a.k == b.k && a.s == b.s && a.p == b.p && a.q == b.q;
  }
};
using Sl2Coords = std::map<Sl2Key, Int>;

/// Normal coordinates N_sl2(A,k,s,p,q).
Sl2Coords sl2_normal_coords(const ExponentSeq& A);

/// Reconstructions: the normal form each coordinate map encodes. Each must
/// agree exactly with normal_order(A.word()); the oracle-equivalence suite
/// checks this on the full desk-scale grid.
NCPolynomial reconstruct(const ExponentSeq& A, const QOCoords& coords);
NCPolynomial reconstruct(const ExponentSeq& A, const QWeylCoords& coords);
NCPolynomial reconstruct(const ExponentSeq& A, const HWeylCoords& coords);
NCPolynomial reconstruct(const ExponentSeq& A, const Sl2Coords& coords);

/// Whether the algebra has a closed-form coordinate formula (all but weyl).
bool has_closed_form(AlgebraId id);

/// Normal form via the algebra's closed-form coordinates; throws
/// "unsupported" for the weyl algebra.
NCPolynomial closed_form_normal_form(const ExponentSeq& A);

/// Splits an arbitrary word into maximal nondecreasing runs, yielding the
/// factor sequence with the same product.
ExponentSeq factors_of_word(const Word& w);

}  // namespace qweyl
