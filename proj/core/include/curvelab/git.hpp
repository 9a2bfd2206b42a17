#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/curve.hpp"
#include "curvelab/linear_change.hpp"

namespace curvelab {

/// Weights (a, b, 0) on the frame coordinates (x, y, z); gcd-normalized.
struct WeightVector {
  int a = 1;
  int b = 1;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// min{a*i + b*j : x1^i x2^j in the support}. Throws InvalidArgument for f = 0.
int weight(const MPoly& f, const WeightVector& w);

/// wt_(a,b)(f) - d(a + b)/3.
Rational weight_excess(const MPoly& f, const WeightVector& w, int d);

/// Inward normals of the lower-left Newton polygon edges of supp(f) plus
/// (1,0), (0,1), (1,1); sorted and deduplicated.
std::vector<WeightVector> candidate_weights(const MPoly& f);

struct Flag {
  ProjPoint point;
  /// Coefficients (l0, l1, l2) of the line l0*x + l1*y + l2*z through the point.
  std::vector<FieldElement> line;
  /// Old coordinates = frame * new; the point goes to [0:0:1] and the line to {x = 0}.
  LinearChange frame;
  /// Accepted unipotent substitutions, in order.
  std::vector<std::string> refinement;
  /// Galois-conjugate flags this one stands for.
  int conjugates = 1;
};

struct FlagList {
  std::vector<Flag> flags;
  bool truncated = false;  ///< some point or tangent line exceeded the extension policy
  int refinements_tried = 0;
  int refinements_accepted = 0;
};

/// f in the flag's frame, restricted to the chart z = 1, in (x1, x2).
MPoly flag_germ(const PlaneCurve& c, const Flag& flag);

/// One flag per reduced tangent-cone line at each singular point, closed
/// under bounded unipotent refinement. `seed` selects the complementary frame vector.
FlagList enumerate_flags(const PlaneCurve& c, const EngineOptions& options = {}, int seed = 0);

enum class StabilityStatus { Unstable, StrictlySemistable, NoDestabilizerFound };

std::string stability_status_name(StabilityStatus s);

struct StabilityWitness {
  Flag flag;
  WeightVector w;
  int weight = 0;
  Rational threshold;  ///< d(a + b)/3
  Rational excess;
  bool verified = false;  ///< recomputed from the frame matrix alone
};

struct SearchSpace {
  int flags = 0;
  int weights_evaluated = 0;
  int refinements_tried = 0;
  int refinements_accepted = 0;
  bool truncated = false;
  bool seeds_agree = true;
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::NoDestabilizerFound;
  /// Present unless the status is NoDestabilizerFound.
  std::optional<StabilityWitness> witness;
  /// Largest excess over the search space; empty when there are no flags.
  std::optional<Rational> max_excess;
  SearchSpace search_space;
};

/// Recomputes the witness weight from the frame matrix alone.
bool verify_witness(const PlaneCurve& c, const StabilityWitness& w);

StabilityVerdict stability(const PlaneCurve& c, const EngineOptions& options = {});

}  // namespace curvelab
