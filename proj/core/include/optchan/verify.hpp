#pragma once

#include <string>
#include <vector>

namespace optchan::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the acceptance checks. With only_id == 0 all criteria run; otherwise
// just the requested one.
std::vector<CriterionResult> run_acceptance(int only_id = 0);

inline constexpr int criterion_count = 11;

}  // namespace optchan::verify
