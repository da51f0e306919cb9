#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opsf {

struct CriterionResult {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string detail;  // measured values, first witness, or error text
  double ms = 0.0;
  double budget_ms = 0.0;
};

// Runs the pinned release battery; exceptions are captured per criterion.
// Each criterion also fails when it overruns its time budget.
std::vector<CriterionResult> run_acceptance();

// One PASS/FAIL line per criterion; returns the number of failures.
int print_acceptance(std::ostream& os);

}  // namespace opsf
