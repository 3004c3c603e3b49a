// Acceptance suite: runs every criterion at its stated bounds and prints one
// pass/fail line per criterion. Criterion 10 exercises the CLI binary, whose
// path is argv[1]. Exit status 0 iff all criteria pass.

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "qweyl/verify.hpp"

namespace {

struct CliRun {
  int status;
  std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  std::string command = "'" + cli + "' " + args + " 2>/dev/null";
  CliRun result{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int rc = pclose(pipe);
  result.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return result;
}

bool cli_conformance(const std::string& cli, std::string& detail) {
  struct Case {
    const char* args;
    const char* expected;
  };
  const std::array<Case, 3> cases = {{
      {"normalize --algebra q-oscillator \"y x\"",
       "{\"terms\":[{\"exps\":[1,1],\"coeff\":\"q\"},{\"exps\":[0,0],\"coeff\":\"h\"}]}\n"},
      {"coeffs --algebra q-weyl --factors \"(0,0,1),(2,0,0)\"",
       "{\"0\":\"1\",\"1\":\"1 + q\"}\n"},
      {"verify --suite representations",
       "{\"pass\":true,\"checked\":140}\n"},
  }};
  for (const Case& c : cases) {
    CliRun run = run_cli(cli, c.args);
    if (run.status != 0) {
      detail = std::string("nonzero exit for: ") + c.args;
      return false;
    }
    if (run.output != c.expected) {
      detail = std::string("output mismatch for: ") + c.args + "\n  expected: " +
               c.expected + "  actual:   " + run.output;
      return false;
    }
  }
  CliRun selftest = run_cli(cli, "selftest");
  if (selftest.status != 0) {
    detail = "selftest exited with status " + std::to_string(selftest.status);
    return false;
  }
  if (selftest.output.find("\"pass\":true") == std::string::npos) {
    detail = "selftest did not report pass:true";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  qweyl::VerifyBounds bounds;  // the documented default bounds
  bool all_pass = true;

  auto criteria = qweyl::run_acceptance_criteria(bounds);
  for (const auto& c : criteria) {
    std::ostringstream line;
    line << "criterion " << c.id << " " << (c.result.pass ? "PASS" : "FAIL")
         << "  " << c.name << " (checked=" << c.result.checked << ", "
         << c.seconds << "s)";
    if (!c.result.pass) line << "\n  counterexample: " << c.result.counterexample;
    std::cout << line.str() << "\n";
    all_pass = all_pass && c.result.pass;
  }

  if (argc > 1) {
    std::string detail;
    bool pass = cli_conformance(argv[1], detail);
    std::cout << "criterion 10 " << (pass ? "PASS" : "FAIL")
              << "  CLI conformance" << (pass ? "" : "\n  " + detail) << "\n";
    all_pass = all_pass && pass;
  } else {
    std::cout << "criterion 10 FAIL  CLI conformance (no CLI path given)\n";
    all_pass = false;
  }

  return all_pass ? 0 : 1;
}
