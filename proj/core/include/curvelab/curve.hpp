#pragma once

#include <string>
#include <vector>

#include "curvelab/linear_change.hpp"
#include "curvelab/mpoly.hpp"
#include "curvelab/options.hpp"

namespace curvelab {

/// Point of projective space with the last nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Throws InvalidArgument for the zero vector.
  explicit ProjPoint(std::vector<FieldElement> coords);
  static ProjPoint from_rationals(const std::vector<Rational>& coords);

  const std::vector<FieldElement>& coords() const noexcept { return coords_; }
  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  /// Index of the last nonzero coordinate (which equals 1).
  int pivot() const;
  FieldPtr field() const;
  bool is_rational() const { return !field(); }

  /// "a:b:c" with field elements written in the generator a.
  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;
  friend bool canonical_less(const ProjPoint& a, const ProjPoint& b);

 private:
  std::vector<FieldElement> coords_;
};

/// Plane curve F(x, y, z) = 0 for a homogeneous form F.
class PlaneCurve {
 public:
  PlaneCurve() = default;
  /// Normalizes the form; throws NotReduced for a repeated factor unless
  /// `allow_non_reduced` is set.
  explicit PlaneCurve(const MPoly& form, bool allow_non_reduced = false);
  /// Parses an expression in x, y, z.
  static PlaneCurve parse(const std::string& text, bool allow_non_reduced = false);

  const MPoly& form() const noexcept { return form_; }
  int degree() const noexcept { return degree_; }
  bool is_reduced() const noexcept { return reduced_; }
  /// Throws NotReduced when the curve was built with the allow flag.
  void require_reduced() const;

  bool contains(const ProjPoint& p) const;

 private:
  MPoly form_;
  int degree_ = 0;
  bool reduced_ = true;
};

const std::vector<std::string>& plane_vars();
const std::vector<std::string>& germ_vars();

struct SingularPoint {
  ProjPoint point;
  int multiplicity = 0;
  /// Number of conjugate points represented (the degree of the point's field).
  int conjugates = 1;
};

enum class Completeness { Complete, TruncatedByExtensionLimit };

struct SingularLocus {
  std::vector<SingularPoint> points;
  Completeness completeness = Completeness::Complete;
};

/// Singular points with coordinates in Q or one extension within the degree bound.
SingularLocus singular_points(const PlaneCurve& c, const EngineOptions& options = {});

/// 0 off the curve, otherwise the order of the local equation.
int multiplicity_at(const PlaneCurve& c, const ProjPoint& p);

/// Local equation at a point: a bivariate germ with the frame used.
struct CurveGerm {
  MPoly equation;  ///< in the variables x1, x2; vanishes at the origin
  FieldPtr field;
  LinearChange origin_history;  ///< original coordinates = M * (x1, x2, 1)
};

/// Moves p to [0:0:1] (columns of the frame: the two remaining standard basis
/// vectors, then p) and sets the last coordinate to 1.
CurveGerm localize(const PlaneCurve& c, const ProjPoint& p);

/// Wraps a bivariate equation as a germ at the origin.
CurveGerm make_germ(const MPoly& equation);

/// No repeated factor of the equation passes through the origin.
bool locally_reduced(const CurveGerm& g);

}  // namespace curvelab
