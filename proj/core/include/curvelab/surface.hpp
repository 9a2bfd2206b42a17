#pragma once

#include <optional>
#include <string>

#include "curvelab/lct.hpp"

namespace curvelab {

enum class Smoothness { Unchecked, Verified, Assumed, Failed };

std::string smoothness_name(Smoothness s);

const std::vector<std::string>& space_vars();

/// Surface F(x, y, z, w) = 0 in P^3.
struct SurfaceForm {
  MPoly form;
  int degree = 0;
  Smoothness smoothness = Smoothness::Unchecked;
  /// Singular point found by verify_smooth, when the status is Failed and it is representable.
  std::optional<ProjPoint> witness;

  SurfaceForm() = default;
  /// Requires a homogeneous form of degree >= 3 in four variables.
  explicit SurfaceForm(const MPoly& f);
  static SurfaceForm parse(const std::string& text);

  bool contains(const ProjPoint& p) const;
};

struct TangentSection {
  PlaneCurve curve;
  /// 4x3 basis of the tangent plane; point of P^3 = basis * (x, y, z).
  Matrix basis;
  /// The tangency point in the plane's coordinates.
  ProjPoint point;
  /// Germ of the section at that point; reduced even when the section has
  /// a repeated component elsewhere.
  CurveGerm germ;
};

/// Restriction of F to the tangent plane at o; the basis is read off the
/// reduced row echelon form of the gradient.
TangentSection tangent_section(const SurfaceForm& s, const ProjPoint& o);

bool is_star_point(const SurfaceForm& s, const ProjPoint& o);

enum class AlphaDichotomy { AlphaEquals, AlphaLowerBound };

struct AlphaProbeReport {
  ProjPoint point;
  TangentSection section;
  Rational lct;
  AlphaDichotomy dichotomy = AlphaDichotomy::AlphaLowerBound;
  /// lct for AlphaEquals, the cutoff (2d - 3)/(d(d - 2)) for AlphaLowerBound.
  Rational value;
  bool star_point = false;
  /// threshold_class of the section at the point, computed for AlphaEquals.
  std::optional<ThresholdClass> threshold;
};

/// Requires smoothness Verified or Assumed.
AlphaProbeReport alpha_probe(const SurfaceForm& s, const ProjPoint& o, const EngineOptions& options = {});

/// The partials have no common zero iff their multiples span all forms of
/// degree 4(d - 2) + 1; full rank of that matrix modulo a prime gives
/// Verified. Failed comes with a witness point found chart by chart, or
/// with rank deficiency modulo primes whose product exceeds the Hadamard
/// bound. `assume` skips the check and sets Assumed. Throws
/// EliminationTooLarge above `max_degree` or when undecided.
Smoothness verify_smooth(SurfaceForm& s, bool assume = false, int max_degree = 6);

}  // namespace curvelab
