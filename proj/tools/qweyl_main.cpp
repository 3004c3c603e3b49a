#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qweyl/json_io.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/repr.hpp"
#include "qweyl/rewrite.hpp"
#include "qweyl/verify.hpp"

namespace {

using qweyl::Json;

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

// --factors "(0,0,1),(2,0,0)" -> exponent tuples of the algebra's arity.
std::vector<qweyl::Exponents> parse_factors(const std::string& src,
                                            qweyl::AlgebraId algebra) {
  std::vector<qweyl::Exponents> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= src.size() || src[pos] != c)
      throw qweyl::Error("parse",
                         std::string("expected '") + c + "' in factor list", pos);
    ++pos;
  };
  while (true) {
    expect('(');
    qweyl::Exponents tuple;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      unsigned long v = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        v = v * 10 + static_cast<unsigned long>(src[pos++] - '0');
      if (pos == start)
        throw qweyl::Error("parse", "expected an exponent in factor list", pos);
      tuple.push_back(static_cast<unsigned>(v));
      skip_ws();
      if (pos < src.size() && src[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(')');
    if (tuple.size() != qweyl::letter_count(algebra))
      throw qweyl::Error("arity-mismatch",
                         "factor tuple arity does not match the algebra");
    out.push_back(std::move(tuple));
    skip_ws();
    if (pos < src.size() && src[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  skip_ws();
  if (pos != src.size())
    throw qweyl::Error("parse", "trailing input in factor list", pos);
  return out;
}

// Classes are multilinear in each slot: arbitrary words expand through
// their normal forms.
qweyl::SymElement class_element(qweyl::AlgebraId algebra, unsigned arity,
                                const std::vector<qweyl::Word>& words) {
  if (words.size() != arity)
    throw qweyl::Error("arity-mismatch",
                       "class size does not match the requested arity");
  std::vector<qweyl::NCPolynomial> slots;
  slots.reserve(arity);
  for (const qweyl::Word& w : words) slots.push_back(qweyl::normal_order(w));

  qweyl::SymElement out(algebra, arity);
  std::vector<qweyl::NCPolynomial::Terms::const_iterator> its(arity);
  for (unsigned j = 0; j < arity; ++j) {
    if (slots[j].is_zero()) return out;
    its[j] = slots[j].terms().begin();
  }
  while (true) {
    std::vector<qweyl::NormalMonomial> tuple;
    tuple.reserve(arity);
    qweyl::PolyQH coeff(1);
    for (unsigned j = 0; j < arity; ++j) {
      tuple.push_back(its[j]->first);
      coeff *= its[j]->second;
    }
    out.add_term(std::move(tuple), coeff);
    unsigned j = 0;
    for (; j < arity; ++j) {
      if (++its[j] != slots[j].terms().end()) break;
      its[j] = slots[j].terms().begin();
    }
    if (j == arity) break;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"normal ordering and symmetric powers of q/h-Weyl-type algebras"};
  app.require_subcommand(1);

  std::string algebra_str = "q-oscillator";
  std::string expr_str;
  std::string factors_str;
  std::string suite = "all";
  std::string engine_str = "auto";
  unsigned arity = 1;
  bool closed_form = false;
  bool serial = false;
  qweyl::VerifyBounds bounds;

  CLI::App* normalize = app.add_subcommand("normalize", "normal-order a word");
  normalize->add_option("--algebra", algebra_str, "algebra id")->required();
  normalize->add_flag("--closed-form", closed_form,
                      "use the closed-form engine and assert oracle agreement");
  normalize->add_option("expr", expr_str, "word to normal-order")->required();

  CLI::App* coeffs = app.add_subcommand("coeffs", "normal coordinates of a factor sequence");
  coeffs->add_option("--algebra", algebra_str, "algebra id")->required();
  coeffs->add_option("--factors", factors_str, "factor tuples, e.g. (0,0,1),(2,0,0)")
      ->required();

  CLI::App* symprod = app.add_subcommand("symprod", "product in Sym^n of the algebra");
  symprod->add_option("--algebra", algebra_str, "algebra id")->required();
  symprod->add_option("--arity", arity, "tensor arity n")->required();
  symprod->add_option("--engine", engine_str, "slot engine: auto|closed-form|oracle");
  symprod->add_option("expr", expr_str, "symmetric-power expression")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "representations|corollaries|oracle-equiv|all");
  verify->add_option("--max-exp", bounds.max_exp, "exponent bound");
  verify->add_option("--max-factors", bounds.max_factors, "factor count bound");
  verify->add_option("--max-t", bounds.max_t, "corollary t bound");
  verify->add_flag("--serial", serial, "disable the OpenMP sweep kernels");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the acceptance criteria at default bounds");
  selftest->add_flag("--serial", serial, "disable the OpenMP sweep kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    throw;
  }

  if (normalize->parsed()) {
    qweyl::AlgebraId id = qweyl::algebra_from_name(algebra_str);
    qweyl::Expr parsed = qweyl::parse(expr_str, id);
    if (!parsed.is_word())
      throw qweyl::Error("parse", "normalize expects a word, not a Sym^n expression");
    qweyl::NCPolynomial oracle = qweyl::normal_order(parsed.word());
    if (closed_form) {
      if (!qweyl::has_closed_form(id))
        throw qweyl::Error("unsupported",
                           "the weyl algebra has no closed-form engine");
      qweyl::NCPolynomial closed = qweyl::closed_form_normal_form(
          qweyl::factors_of_word(parsed.word()));
      if (!(closed == oracle))
        throw qweyl::Error("internal",
                           "closed-form and oracle normal forms differ");
      emit(qweyl::ncpoly_json(closed));
    } else {
      emit(qweyl::ncpoly_json(oracle));
    }
    return 0;
  }

  if (coeffs->parsed()) {
    qweyl::AlgebraId id = qweyl::algebra_from_name(algebra_str);
    if (!qweyl::has_closed_form(id))
      throw qweyl::Error("unsupported",
                         "the weyl algebra has no closed-form coordinates");
    qweyl::ExponentSeq A(id, parse_factors(factors_str, id));
    switch (id) {
      case qweyl::AlgebraId::q_oscillator:
        emit(qweyl::coords_json(qweyl::qo_normal_coords(A)));
        break;
      case qweyl::AlgebraId::q_weyl:
        emit(qweyl::coords_json(qweyl::q_normal_coords(A)));
        break;
      case qweyl::AlgebraId::h_weyl:
        emit(qweyl::coords_json(qweyl::h_normal_coords(A)));
        break;
      case qweyl::AlgebraId::sl2:
        emit(qweyl::coords_json(qweyl::sl2_normal_coords(A)));
        break;
      default:
        break;
    }
    return 0;
  }

  if (symprod->parsed()) {
    qweyl::AlgebraId id = qweyl::algebra_from_name(algebra_str);
    qweyl::Expr parsed = qweyl::parse(expr_str, id);
    qweyl::SymProductOptions options;
    if (const char* cap = std::getenv("QWEYL_MAX_WORK"))
      options.work_cap = std::strtoull(cap, nullptr, 10);
    if (engine_str == "closed-form")
      options.engine = qweyl::SlotEngine::closed_form;
    else if (engine_str == "oracle")
      options.engine = qweyl::SlotEngine::oracle;
    else if (engine_str != "auto")
      throw qweyl::Error("usage", "unknown engine '" + engine_str + "'");

    std::vector<qweyl::SymElement> factors;
    if (parsed.is_word()) {
      throw qweyl::Error("parse", "symprod expects bracketed class terms");
    }
    if (parsed.sym().arity != arity)
      throw qweyl::Error("arity-mismatch",
                         "classes have arity " + std::to_string(parsed.sym().arity) +
                             ", requested " + std::to_string(arity));
    for (const auto& cls : parsed.sym().classes)
      factors.push_back(class_element(id, arity, cls));
    emit(qweyl::sym_json(qweyl::sym_product(id, arity, factors, options)));
    return 0;
  }

  if (verify->parsed()) {
    bounds.parallel = !serial;
    qweyl::SuiteResult result;
    if (suite == "representations")
      result = qweyl::suite_representations(bounds);
    else if (suite == "corollaries")
      result = qweyl::suite_corollaries(bounds);
    else if (suite == "oracle-equiv")
      result = qweyl::suite_oracle_equiv(bounds);
    else if (suite == "all")
      result = qweyl::suite_all(bounds);
    else
      throw qweyl::Error("usage", "unknown suite '" + suite + "'");
    if (!result.pass) {
      Json doc = qweyl::error_json("verification-failed", result.counterexample);
      doc["checked"] = result.checked;
      emit(doc);
      return 1;
    }
    Json doc;
    doc["pass"] = true;
    doc["checked"] = result.checked;
    emit(doc);
    return 0;
  }

  if (selftest->parsed()) {
    qweyl::VerifyBounds defaults;
    defaults.parallel = !serial;
    auto criteria = qweyl::run_acceptance_criteria(defaults);
    Json list = Json::array();
    bool pass = true;
    std::string first_failure;
    for (const auto& c : criteria) {
      Json entry;
      entry["id"] = c.id;
      entry["name"] = c.name;
      entry["pass"] = c.result.pass;
      entry["checked"] = c.result.checked;
      entry["seconds"] = c.seconds;
      if (!c.result.pass) {
        entry["counterexample"] = c.result.counterexample;
        if (pass) first_failure = c.name + ": " + c.result.counterexample;
        pass = false;
      }
      list.push_back(std::move(entry));
    }
    if (!pass) {
      Json doc = qweyl::error_json("selftest-failed", first_failure);
      doc["criteria"] = std::move(list);
      emit(doc);
      return 1;
    }
    Json doc;
    doc["pass"] = true;
    doc["criteria"] = std::move(list);
    emit(doc);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help and friends
    emit(qweyl::error_json("usage", e.what()));
    return 1;
  } catch (const qweyl::Error& e) {
    emit(qweyl::error_json(e.code(), e.what(), e.position()));
    return 1;
  } catch (const std::exception& e) {
    emit(qweyl::error_json("internal", e.what()));
    return 1;
  }
}
