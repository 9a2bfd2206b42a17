#include <cstdio>
#include <string>

#include "curvelab/regression_suite.hpp"

int main() {
  bool all = true;
  for (const auto& info : curvelab::regression_criteria()) {
    const curvelab::CriterionResult r = curvelab::run_criterion(info.id);
    all = all && r.passed;
    std::string detail;
    for (const auto& d : r.details) detail += (detail.empty() ? "" : "; ") + d;
    std::printf("%s criterion %2d: %s -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), detail.c_str());
  }
  return all ? 0 : 1;
}
