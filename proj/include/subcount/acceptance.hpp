#pragma once

#include <string>
#include <vector>

namespace subcount {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full statistical acceptance battery. Deterministic: fixed seeds
// throughout, so the report is byte-identical across runs.
std::vector<CriterionResult> run_acceptance();

// Prints one line per criterion plus a summary; returns 0 iff all pass.
int acceptance_main();

}  // namespace subcount
