#pragma once

#include <optional>
#include <string>

#include "curvelab/lct.hpp"

namespace curvelab {

enum class SingularityTag { Smooth, A, Cone, T, K, TildeT, TildeK, PloskiEven, PloskiOdd, Other };

std::string singularity_tag_name(SingularityTag tag);

struct SingularityClass {
  SingularityTag tag = SingularityTag::Other;
  /// r for Cone and the T/K families, n for A(n); 0 otherwise.
  int parameter = 0;
  int multiplicity = 0;
  int mu = 0;
  int branches = 0;
  /// Classical name when one applies, e.g. "A2" for K with r = 2.
  std::string alias;
  EquisingularityType type;
  /// Set for the Ploski tags: the germ test (branch count plus pairwise
  /// contacts) is a local reading of a global definition.
  bool germ_level_reading = false;
};

/// Milnor number from the resolution: sum of m(m - 1) over blown-up points
/// minus the branch count plus one; 0 at smooth points.
int milnor(const CurveGerm& g, const EngineOptions& options = {});
int milnor(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options = {});

/// Independent check: local intersection number of the two partials at the
/// origin, read off as the order of their resultant after a generic shear.
/// Requires a rational point.
int milnor_oracle(const PlaneCurve& c, const ProjPoint& p);
int milnor_oracle(const CurveGerm& g);

/// Priority: Smooth, Cone (m = d), T/K/T~/K~ with r = m <= d - 1 (only T and
/// K when r = 2), Ploski point, A(n) for double points, Other.
SingularityClass classify(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options = {});
/// Same for a germ of a degree-d curve.
SingularityClass classify(const CurveGerm& g, int d, const EngineOptions& options = {});

struct PloskiReport {
  int degree = 0;
  /// Largest Milnor number among singular points of multiplicity below d; 0 if none.
  int max_mu = 0;
  std::optional<ProjPoint> point;
  int bound = 0;  ///< (d - 1)^2 - floor(d / 2)
  bool equality = false;
  bool recognized = false;  ///< some point classifies as a Ploski point of the right parity
};

/// Throws ExtensionLimit when the singular locus is not complete.
PloskiReport ploski_extremality_check(const PlaneCurve& c, const EngineOptions& options = {});

}  // namespace curvelab
