#include <doctest.h>

#include <random>

#include "qweyl/rewrite.hpp"

using namespace qweyl;

namespace {

Word word_from(AlgebraId id, const std::string& letters) {
  Word w{id, {}};
  for (char c : letters)
    w.letters.push_back(static_cast<std::uint8_t>(letter_index(id, c)));
  return w;
}

NormalMonomial mono(AlgebraId id, Exponents e) { return monomial(id, std::move(e)); }

Word random_word(AlgebraId id, std::mt19937& rng, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(0, max_len);
  std::uniform_int_distribution<unsigned> letter(0, letter_count(id) - 1);
  Word w{id, {}};
  unsigned n = len(rng);
  for (unsigned i = 0; i < n; ++i)
    w.letters.push_back(static_cast<std::uint8_t>(letter(rng)));
  return w;
}

// Word weight plus the h-weight of one coefficient key, per the algebra's
// grading.
int term_weight(AlgebraId id, const NormalMonomial& m, unsigned deg_h) {
  const Grading& g = grading(id);
  int w = 0;
  for (unsigned i = 0; i < m.exps.size(); ++i)
    w += g.letter_weight[i] * int(m.exps[i]);
  return w + g.h_weight * int(deg_h);
}

int word_weight(const Word& w) {
  const Grading& g = grading(w.algebra);
  int s = 0;
  for (std::uint8_t l : w.letters) s += g.letter_weight[l];
  return s;
}

void enumerate_words(AlgebraId id, unsigned max_len,
                     const std::function<void(const Word&)>& fn) {
  Word w{id, {}};
  std::function<void(unsigned)> rec = [&](unsigned remaining) {
    fn(w);
    if (remaining == 0) return;
    for (unsigned l = 0; l < letter_count(id); ++l) {
      w.letters.push_back(static_cast<std::uint8_t>(l));
      rec(remaining - 1);
      w.letters.pop_back();
    }
  };
  rec(max_len);
}

}  // namespace

TEST_CASE("normal_order on the defining relations") {
  NCPolynomial yx = normal_order(word_from(AlgebraId::q_oscillator, "yx"));
  NCPolynomial expected(AlgebraId::q_oscillator);
  expected.add_term(mono(AlgebraId::q_oscillator, {1, 1}), PolyQH::q());
  expected.add_term(mono(AlgebraId::q_oscillator, {0, 0}), PolyQH::h());
  CHECK(yx == expected);

  NCPolynomial zxx = normal_order(word_from(AlgebraId::q_weyl, "zxx"));
  NCPolynomial expected2(AlgebraId::q_weyl);
  expected2.add_term(mono(AlgebraId::q_weyl, {2, 0, 1}), PolyQH(1));
  expected2.add_term(mono(AlgebraId::q_weyl, {1, 1, 0}), q_integer(2));
  CHECK(zxx == expected2);

  NCPolynomial hw = normal_order(word_from(AlgebraId::h_weyl, "yx"));
  NCPolynomial expected3(AlgebraId::h_weyl);
  expected3.add_term(mono(AlgebraId::h_weyl, {1, 1, 0}), PolyQH(1));
  expected3.add_term(mono(AlgebraId::h_weyl, {0, 0, 1}), PolyQH(1));
  CHECK(hw == expected3);
}

TEST_CASE("multiply is unital and matches the relations") {
  NCPolynomial y = NCPolynomial::from_monomial(mono(AlgebraId::q_oscillator, {0, 1}));
  NCPolynomial x = NCPolynomial::from_monomial(mono(AlgebraId::q_oscillator, {1, 0}));
  CHECK(multiply(NCPolynomial::unit(AlgebraId::q_oscillator), y) == y);
  CHECK(multiply(y, NCPolynomial::unit(AlgebraId::q_oscillator)) == y);
  CHECK(multiply(y, x) == normal_order(word_from(AlgebraId::q_oscillator, "yx")));

  NCPolynomial zs = NCPolynomial::from_monomial(mono(AlgebraId::sl2, {0, 0, 1}));
  NCPolynomial ys = NCPolynomial::from_monomial(mono(AlgebraId::sl2, {0, 1, 0}));
  NCPolynomial zy = multiply(zs, ys);
  NCPolynomial expected(AlgebraId::sl2);
  expected.add_term(mono(AlgebraId::sl2, {0, 1, 1}), PolyQH(1));
  expected.add_term(mono(AlgebraId::sl2, {0, 0, 1}), PolyQH(-2));
  CHECK(zy == expected);

  NCPolynomial wx = NCPolynomial::from_monomial(mono(AlgebraId::weyl, {1, 0}));
  CHECK_THROWS_AS(multiply(wx, y), Error);
}

TEST_CASE("multiply is associative on random inputs") {
  std::mt19937 rng(99);
  for (AlgebraId id : kAllAlgebras) {
    for (int i = 0; i < 10; ++i) {
      NCPolynomial a = normal_order(random_word(id, rng, 4));
      NCPolynomial b = normal_order(random_word(id, rng, 4));
      NCPolynomial c = normal_order(random_word(id, rng, 4));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("tensor products act componentwise") {
  AlgebraId id = AlgebraId::q_oscillator;
  NormalMonomial u = unit_monomial(id);
  NormalMonomial x = mono(id, {1, 0});
  NormalMonomial y = mono(id, {0, 1});

  TensorElement xs(id, 2), ys(id, 2);
  xs.add_term({x, u}, PolyQH(1));
  ys.add_term({u, y}, PolyQH(1));
  TensorElement xy = tensor_multiply(xs, ys);
  TensorElement expected(id, 2);
  expected.add_term({x, y}, PolyQH(1));
  CHECK(xy == expected);

  TensorElement ylead(id, 2), xlead(id, 2);
  ylead.add_term({y, u}, PolyQH(1));
  xlead.add_term({x, u}, PolyQH(1));
  TensorElement prod = tensor_multiply(ylead, xlead);
  TensorElement expected2(id, 2);
  expected2.add_term({mono(id, {1, 1}), u}, PolyQH::q());
  expected2.add_term({u, u}, PolyQH::h());
  CHECK(prod == expected2);

  CHECK(tensor_multiply(TensorElement::unit(id, 2), prod) == prod);
  CHECK(tensor_multiply(prod, TensorElement::unit(id, 2)) == prod);
}

TEST_CASE("symmetrize distributes permutations with 1/n! weights") {
  AlgebraId id = AlgebraId::q_oscillator;
  NormalMonomial u = unit_monomial(id);
  NormalMonomial x = mono(id, {1, 0});

  TensorElement single = symmetrize({x});
  TensorElement expected1(id, 1);
  expected1.add_term({x}, PolyQH(1));
  CHECK(single == expected1);

  TensorElement half = symmetrize({x, u});
  TensorElement expected2(id, 2);
  expected2.add_term({x, u}, PolyQH(Rational(1, 2)));
  expected2.add_term({u, x}, PolyQH(Rational(1, 2)));
  CHECK(half == expected2);

  TensorElement repeated = symmetrize({x, x});
  TensorElement expected3(id, 2);
  expected3.add_term({x, x}, PolyQH(1));
  CHECK(repeated == expected3);
  CHECK(repeated.is_symmetric());
  CHECK(half.is_symmetric());
}

TEST_CASE("confluence: leftmost and rightmost-innermost strategies agree") {
  std::mt19937 rng(20240811);
  for (AlgebraId id : kAllAlgebras) {
    for (int i = 0; i < 200; ++i) {
      Word w = random_word(id, rng, 8);
      CHECK(normal_order(w, Strategy::leftmost) ==
            normal_order(w, Strategy::rightmost_innermost));
    }
  }
}

TEST_CASE("every rewrite step decreases (length, inversions)") {
  std::mt19937 rng(424242);
  for (AlgebraId id : kAllAlgebras) {
    for (int i = 0; i < 100; ++i) {
      Word w = random_word(id, rng, 8);
      for (Strategy st : {Strategy::leftmost, Strategy::rightmost_innermost}) {
        auto step = rewrite_step(w, st);
        if (!step) {
          CHECK(inversions(w) == 0);
          continue;
        }
        for (const auto& [next, coeff] : *step) {
          bool shorter = next.size() < w.size();
          bool fewer = next.size() == w.size() && inversions(next) < inversions(w);
          CHECK((shorter || fewer));
        }
      }
    }
  }
}

TEST_CASE("grading conservation on all words of length <= 6") {
  for (AlgebraId id : kAllAlgebras) {
    enumerate_words(id, 6, [&](const Word& w) {
      int expected = word_weight(w);
      NCPolynomial nf = normal_order(w);
      for (const auto& [m, c] : nf.terms())
        for (const auto& [key, coeff] : c.terms())
          CHECK(term_weight(id, m, key.second) == expected);
    });
  }
}
