#pragma once

#include <optional>
#include <string>

#include "curvelab/resolution.hpp"

namespace curvelab {

struct LctReport {
  Rational value{1};
  /// Divisor attaining the minimum; empty when the bound 1 is the binding one.
  std::optional<int> witness_divisor;
  ProjPoint point;
};

/// min(1, min over exceptional divisors of (1 + a) / m). Throws Unresolved
/// for a partial tree.
LctReport lct_from_resolution(const ResolutionTree& t);

/// Exactly 1 at smooth points, otherwise through the resolution of the germ.
LctReport lct_of_germ(const CurveGerm& g, const EngineOptions& options = {});
LctReport lct_at_point(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options = {});

struct GlobalLct {
  Rational value{1};
  std::optional<ProjPoint> witness;
  /// Singular points may be missing (degree bound) or unresolved; value is then an upper bound.
  bool partial = false;
};

GlobalLct lct_global(const PlaneCurve& c, const EngineOptions& options = {});

/// Closed form for the germ x1^n1 x2^n2 (x1^(k m1) + x2^(k m2)):
/// min{1/n1, 1/n2, (1/m1 + 1/m2) / (k + n1/m1 + n2/m2)}, dropping 1/n_i when n_i = 0,
/// and capped at 1 as for any reduced germ.
/// Throws NonReducedModel for parameters giving a non-reduced or unit germ.
Rational kuwata_lct(int n1, int n2, int k, int m1, int m2);

enum class ThresholdTag { ConeAtPoint, T, K, TildeT, TildeK, PloskiQuartic, AboveFifthThreshold };

std::string threshold_tag_name(ThresholdTag tag);

struct ThresholdClass {
  ThresholdTag tag = ThresholdTag::AboveFifthThreshold;
  int r = 0;  ///< d - 1 for the T/K families
  /// Table value; for AboveFifthThreshold the fifth threshold, a strict lower bound.
  Rational predicted_lct;
  Rational computed_lct;
  /// computed == predicted for tagged cases, computed > predicted otherwise.
  bool consistent = false;
};

/// The five smallest thresholds for degree d: 2/d, (2d-3)/(d-1)^2,
/// (2d-1)/(d(d-1)), (2d-5)/(d^2-3d+1), (2d-3)/(d(d-2)).
Rational threshold_value(ThresholdTag tag, int d);

/// Normal-form germs in (x1, x2): T_r x1^r - x1*x2^r, K_r x1^r - x2^(r+1),
/// T~_r x2*x1^(r-1) - x1*x2^r, K~_r x2*x1^(r-1) - x2^(r+1). PloskiQuartic
/// gives the A7 germ x2^2 - x1^8, ConeAtPoint r distinct lines x2 = i*x1.
MPoly normal_form_germ(ThresholdTag tag, int r);

ThresholdClass threshold_class(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options = {});
/// Same for a germ of a degree-d curve.
ThresholdClass threshold_class(const CurveGerm& g, int d, const EngineOptions& options = {});

}  // namespace curvelab
