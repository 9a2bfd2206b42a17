#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/json_io.hpp"

namespace curvelab {

struct PointRecord {
  SingularPoint singular;
  std::optional<int> mu;
  std::optional<Rational> lct;
  std::optional<SingularityClass> classification;
  /// Error code name when the point could not be fully analyzed.
  std::string error;
};

struct AnalysisReport {
  PlaneCurve curve;
  std::vector<PointRecord> points;
  GlobalLct global;
  std::optional<StabilityVerdict> stability;
  bool locus_complete = true;
  /// Some point or the stability search hit the extension policy.
  bool partial = false;
};

/// Singular points with m, mu, lct and class; the global lct; the GIT verdict.
AnalysisReport analyze(const PlaneCurve& c, const EngineOptions& options = {}, bool with_stability = true);

inline constexpr const char* kReportSchema = "curvelab.report/1";

Json to_json(const AnalysisReport& r);

}  // namespace curvelab
