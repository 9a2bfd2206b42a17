#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvelab/options.hpp"

namespace curvelab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// One line per failed check, or a short summary when everything passed.
  std::vector<std::string> details;
};

struct CriterionInfo {
  int id;
  std::string name;
};

const std::vector<CriterionInfo>& regression_criteria();

/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const EngineOptions& options = {});

std::vector<CriterionResult> run_regression_suite(const EngineOptions& options = {});

}  // namespace curvelab
