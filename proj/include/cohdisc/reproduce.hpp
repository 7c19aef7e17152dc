#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cohdisc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ReproductionReport {
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
  double total_seconds = 0.0;
};

// Runs the built-in verification suite (checks 1 through 10).  quick shrinks
// the sample counts for smoke runs; seed offsets the random fixtures, except
// the multicopy trace, which keeps its own frozen seed so the published curve
// is stable.  on_result fires as each check completes.  Never throws: a check
// that raises is reported as failed.
ReproductionReport run_reproduction(
    std::uint64_t seed, bool quick,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace cohdisc
