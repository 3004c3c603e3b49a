#include "qweyl/algebra.hpp"

#include <sstream>

namespace qweyl {

namespace {

struct AlgebraInfo {
  std::string name;
  unsigned letters;
  const char* letter_names;
  Grading grading;
};

const AlgebraInfo& info(AlgebraId id) {
  static const std::array<AlgebraInfo, 5> table = {{
      {"weyl", 2, "xy", {{1, -1, 0}, 0}},
      {"q-oscillator", 2, "xy", {{1, -1, 0}, 0}},
      {"q-weyl", 3, "xyz", {{1, 0, -1}, 0}},
      {"h-weyl", 3, "xyz", {{1, -1, 0}, 1}},
      {"sl2", 3, "xyz", {{1, 0, -1}, 0}},
  }};
  return table[static_cast<std::size_t>(id)];
}

Word make_word(AlgebraId id, std::initializer_list<std::uint8_t> ls) {
  return Word{id, std::vector<std::uint8_t>(ls)};
}

std::vector<RewriteRule> build_rules(AlgebraId id) {
  constexpr std::uint8_t X = 0, Y = 1, Z = 2;
  const PolyQH one(1);
  const PolyQH q = PolyQH::q();
  const PolyQH h = PolyQH::h();
  std::vector<RewriteRule> rules;
  switch (id) {
    case AlgebraId::weyl:
      rules.emplace_back(id, Y, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Y}), one},
                             {make_word(id, {}), h}});
      break;
    case AlgebraId::q_oscillator:
      rules.emplace_back(id, Y, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Y}), q},
                             {make_word(id, {}), h}});
      break;
    case AlgebraId::q_weyl:
      rules.emplace_back(id, Y, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Y}), q}});
      rules.emplace_back(id, Z, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Z}), one},
                             {make_word(id, {Y}), one}});
      rules.emplace_back(id, Z, Y,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {Y, Z}), q}});
      break;
    case AlgebraId::h_weyl:
      // zx = xz + zh: h is central, so the second replacement is the word
      // "z" with coefficient h.
      rules.emplace_back(id, Y, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Y}), one},
                             {make_word(id, {Z}), one}});
      rules.emplace_back(id, Z, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Z}), one},
                             {make_word(id, {Z}), h}});
      rules.emplace_back(id, Z, Y,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {Y, Z}), one}});
      break;
    case AlgebraId::sl2:
      rules.emplace_back(id, Y, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Y}), one},
                             {make_word(id, {X}), PolyQH(-2)}});
      rules.emplace_back(id, Z, X,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {X, Z}), one},
                             {make_word(id, {Y}), one}});
      rules.emplace_back(id, Z, Y,
                         std::vector<std::pair<Word, PolyQH>>{
                             {make_word(id, {Y, Z}), one},
                             {make_word(id, {Z}), PolyQH(-2)}});
      break;
  }
  return rules;
}

}  // namespace

const std::string& algebra_name(AlgebraId id) { return info(id).name; }

AlgebraId algebra_from_name(const std::string& name) {
  for (AlgebraId id : kAllAlgebras)
    if (info(id).name == name) return id;
  throw Error("unknown-algebra", "unknown algebra '" + name + "'");
}

unsigned letter_count(AlgebraId id) { return info(id).letters; }

char letter_name(AlgebraId id, unsigned index) {
  if (index >= info(id).letters)
    throw Error("bad-letter", "letter index out of range");
  return info(id).letter_names[index];
}

unsigned letter_index(AlgebraId id, char letter) {
  const AlgebraInfo& a = info(id);
  for (unsigned i = 0; i < a.letters; ++i)
    if (a.letter_names[i] == letter) return i;
  throw Error("bad-letter",
              std::string("unknown letter '") + letter + "' for algebra " + a.name);
}

const Grading& grading(AlgebraId id) { return info(id).grading; }

std::string Word::str() const {
  std::string s;
  for (std::uint8_t l : letters) s.push_back(letter_name(algebra, l));
  return s;
}

unsigned inversions(const Word& w) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    for (std::size_t j = i + 1; j < w.letters.size(); ++j)
      if (w.letters[i] > w.letters[j]) ++count;
  return count;
}

RewriteRule::RewriteRule(AlgebraId algebra, std::uint8_t hi, std::uint8_t lo,
                         std::vector<std::pair<Word, PolyQH>> rhs)
    : algebra(algebra), hi(hi), lo(lo), rhs(std::move(rhs)) {
  if (hi <= lo || hi >= letter_count(algebra))
    throw Error("bad-rule", "rule pattern must be a descent (hi, lo)");
  Word lhs{algebra, {hi, lo}};
  unsigned lhs_inv = inversions(lhs);
  for (const auto& [w, c] : this->rhs) {
    if (w.algebra != algebra)
      throw Error("algebra-mismatch", "replacement word algebra mismatch");
    bool shorter = w.size() < lhs.size();
    bool fewer = w.size() == lhs.size() && inversions(w) < lhs_inv;
    if (!shorter && !fewer)
      throw Error("bad-rule",
                  "replacement '" + w.str() + "' violates the termination witness");
    (void)c;
  }
}

const std::vector<RewriteRule>& presentation(AlgebraId id) {
  static const std::array<std::vector<RewriteRule>, 5> rules = {
      build_rules(AlgebraId::weyl), build_rules(AlgebraId::q_oscillator),
      build_rules(AlgebraId::q_weyl), build_rules(AlgebraId::h_weyl),
      build_rules(AlgebraId::sl2)};
  return rules[static_cast<std::size_t>(id)];
}

const RewriteRule& rule_for(AlgebraId id, std::uint8_t hi, std::uint8_t lo) {
  for (const RewriteRule& r : presentation(id))
    if (r.hi == hi && r.lo == lo) return r;
  throw Error("bad-rule", "no rule for the requested pair");
}

NormalMonomial monomial(AlgebraId id, const Exponents& exps) {
  if (exps.size() != letter_count(id))
    throw Error("arity-mismatch", "exponent vector length does not match algebra");
  return NormalMonomial{id, exps};
}

NormalMonomial unit_monomial(AlgebraId id) {
  return NormalMonomial{id, Exponents(letter_count(id), 0)};
}

Word word_of(const NormalMonomial& m) {
  Word w{m.algebra, {}};
  for (unsigned i = 0; i < m.exps.size(); ++i)
    for (unsigned k = 0; k < m.exps[i]; ++k)
      w.letters.push_back(static_cast<std::uint8_t>(i));
  return w;
}

std::string NCPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (!it->first.is_unit()) {
      os << "*";
      for (unsigned i = 0; i < it->first.exps.size(); ++i) {
        unsigned e = it->first.exps[i];
        if (e == 0) continue;
        os << letter_name(algebra_, i);
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

}  // namespace qweyl
