// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria 1 through 10 run in-process; criterion 11 drives the installed
// command-line tool end to end and holds it to a wall-clock budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "cohdisc/reproduce.hpp"

namespace {

constexpr double kCliBudgetSeconds = 60.0;

void print_line(int id, bool passed, const std::string& text) {
  std::cout << "criterion " << id << ": " << (passed ? "PASS" : "FAIL")
            << "  " << text << "\n"
            << std::flush;
}

bool run_cli_reproduction() {
  const std::string cmd =
      std::string(COHDISC_CLI_BIN) + " reproduce > /dev/null 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int raw = std::system(cmd.c_str());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  const bool passed = code == 0 && elapsed < kCliBudgetSeconds;
  std::ostringstream text;
  text.precision(3);
  text << "full reproduction via the command line: exit " << code << " in "
       << elapsed << " s (budget " << kCliBudgetSeconds << " s)";
  print_line(11, passed, text.str());
  return passed;
}

}  // namespace

int main() {
  bool all = true;
  const auto on_result = [&](const cohdisc::CriterionResult& r) {
    print_line(r.id, r.passed, r.name + "; " + r.detail);
  };
  const cohdisc::ReproductionReport rep =
      cohdisc::run_reproduction(0xC0FFEE, false, on_result);
  all = rep.all_passed;
  all = run_cli_reproduction() && all;
  std::cout << (all ? "acceptance: all criteria passed"
                    : "acceptance: FAILURES above")
            << "\n";
  return all ? 0 : 1;
}
