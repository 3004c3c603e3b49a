#include "qweyl/parser.hpp"

#include <cctype>
#include <sstream>

namespace qweyl {

namespace {

class Cursor {
 public:
  Cursor(const std::string& src, AlgebraId algebra)
      : src_(src), algebra_(algebra) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& expected) {
    std::ostringstream os;
    os << "parse error at position " << pos_ << ": " << expected;
    if (pos_ < src_.size()) os << ", found '" << src_[pos_] << "'";
    else os << ", found end of input";
    throw Error("parse", os.str(), pos_);
  }

  unsigned parse_uint() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected an exponent");
    unsigned long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  // word := term+ ; term := letter ('^' uint)? | '1'
  Word parse_word() {
    Word w{algebra_, {}};
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= src_.size()) break;
      char ch = src_[pos_];
      if (ch == '1') {
        ++pos_;
        any = true;
        continue;  // unit factor
      }
      if (!std::isalpha(static_cast<unsigned char>(ch))) break;
      std::size_t at = pos_;
      ++pos_;
      unsigned letter;
      try {
        letter = letter_index(algebra_, ch);
      } catch (const Error& e) {
        throw Error("parse", e.what(), at);
      }
      unsigned exp = 1;
      if (pos_ < src_.size() && src_[pos_] == '^') {
        ++pos_;
        exp = parse_uint();
      }
      for (unsigned i = 0; i < exp; ++i)
        w.letters.push_back(static_cast<std::uint8_t>(letter));
      any = true;
    }
    if (!any) fail("expected a word (letters or '1')");
    return w;
  }

  std::vector<Word> parse_class() {
    expect('[', "'['");
    std::vector<Word> words;
    words.push_back(parse_word());
    while (accept(',')) words.push_back(parse_word());
    expect(']', "']'");
    return words;
  }

  Expr parse_expr() {
    Expr e{algebra_, Word{algebra_, {}}};
    if (peek() == '[') {
      SymExpr sym;
      sym.classes.push_back(parse_class());
      sym.arity = static_cast<unsigned>(sym.classes.front().size());
      while (accept('*')) {
        std::size_t at = pos();
        sym.classes.push_back(parse_class());
        if (sym.classes.back().size() != sym.arity)
          throw Error("parse", "arity mismatch among classes", at);
      }
      if (!done()) fail("expected '*' or end of input");
      e.value = std::move(sym);
      return e;
    }
    e.value = parse_word();
    if (!done()) fail("expected end of input");
    return e;
  }

 private:
  const std::string& src_;
  AlgebraId algebra_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& src, AlgebraId algebra) {
  Cursor cursor(src, algebra);
  return cursor.parse_expr();
}

std::string render(const Word& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!first) os << " ";
    first = false;
    os << letter_name(w.algebra, w.letters[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string render(const Expr& e) {
  if (e.is_word()) return render(e.word());
  std::ostringstream os;
  bool first_class = true;
  for (const std::vector<Word>& cls : e.sym().classes) {
    if (!first_class) os << " * ";
    first_class = false;
    os << "[";
    bool first = true;
    for (const Word& w : cls) {
      if (!first) os << ", ";
      first = false;
      os << render(w);
    }
    os << "]";
  }
  return os.str();
}

}  // namespace qweyl
