#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/lct.hpp"
#include "curvelab/surface.hpp"

namespace curvelab {

/// Product of the lines y = s*x through [0:0:1]; an empty slope stands for
/// the line x = 0. Throws DuplicateSlope.
PlaneCurve cone_curve(const std::vector<std::optional<Rational>>& slopes);
/// Slopes 0, 1, ..., d - 2 and the vertical line.
PlaneCurve cone_curve(int d);

/// Even d: prod (yz - x^2 - c_i y^2) over d/2 parameters; odd d: y times
/// (d - 1)/2 such conics. Parameters must be distinct and nonzero
/// (ParameterClash); contacts at [0:0:1] are checked through resolution.
PlaneCurve ploski_curve(int d, const std::vector<Rational>& params);
/// Parameters 1, 2, 3, ...
PlaneCurve ploski_curve(int d);

/// alpha x^(d-1) z + beta y x^(d-2) z = gamma x y^(d-1) + delta y^d + sum a_i x^i y^(d-i)
/// with (alpha, beta, gamma, delta) fixed by the tag; `coeffs` holds a_2..a_d
/// (empty means all zero). Throws NonReducedResult.
PlaneCurve tk_curve(int d, ThresholdTag tag, const std::vector<Rational>& coeffs = {});

PlaneCurve wall_quintic();
/// w^3 x + w^2 y z + x y z (y + z).
SurfaceForm quartic_surface_a1();

const std::vector<std::string>& named_example_names();
struct NamedExample {
  std::optional<PlaneCurve> curve;
  std::optional<SurfaceForm> surface;
};
/// Throws UnknownName.
NamedExample named_example(const std::string& name);

/// x1^n1 x2^n2 (x1^(k m1) + x2^(k m2)); throws NonReducedModel like kuwata_lct.
MPoly kuwata_germ(int n1, int n2, int k, int m1, int m2);

/// Coefficients drawn uniformly from [-3, 3], redrawn until reduced.
PlaneCurve random_reduced_curve(int d, std::uint64_t seed);
/// Random reduced curve singular at [0:0:1] with multiplicity below d: the
/// support is cut below a random Newton line through the point.
PlaneCurve random_singular_curve(int d, std::uint64_t seed);

/// z w^(d-1) + x^d + y^d + z^d: [0:0:0:1] is a star point.
SurfaceForm star_surface(int d);
/// z*A + x^(d-1) w - y^d with A = w^(d-1) + seeded terms, the first draw
/// whose smoothness is Verified. The tangent section at [0:0:0:1] has a
/// K_(d-1) point. Throws EliminationTooLarge when no draw verifies.
SurfaceForm k_lift_surface(int d, std::uint64_t seed = 1, int attempts = 16);

enum class GeneratorKind { Cone, PloskiEven, PloskiOdd, TKFamily, WallQuintic, ExampleQuarticSurface, KuwataGerm, Random };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  int degree = 0;
  ThresholdTag tag = ThresholdTag::T;
  std::vector<Rational> params;
  std::uint64_t seed = 1;
  bool singular = false;  ///< Random: use the singular variant
};

struct Generated {
  std::optional<PlaneCurve> curve;
  std::optional<SurfaceForm> surface;
  std::optional<MPoly> germ;
};

/// Throws InvalidArgument for parameters outside a kind's range.
Generated generate(const GeneratorSpec& spec);

}  // namespace curvelab
