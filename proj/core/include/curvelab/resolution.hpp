#pragma once

#include <string>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

/// Exceptional divisor created by blowing up one infinitely near point.
struct DivisorRecord {
  int id = 0;
  /// Exceptional divisors through the blown-up center (at most two).
  std::vector<int> parents;
  int a = 0;            ///< discrepancy: 1 + sum of the parents' a
  int m = 0;            ///< multiplicity of the total transform: center_mult + sum of the parents' m
  int center_mult = 0;  ///< multiplicity of the strict transform at the center
  int center = 0;       ///< NearPoint id of the center
  /// Galois-conjugate copies this record stands for.
  int conjugates = 1;
};

/// Point of the strict transform over the origin, in local coordinates (u, v).
struct NearPoint {
  int id = 0;
  int parent = -1;  ///< point whose blow-up produced this one
  int depth = 0;
  MPoly equation;   ///< local equation (empty for direction-only leaves)
  FieldPtr field;
  /// Exceptional divisor whose strict transform is {u = 0} resp. {v = 0}; -1 if none.
  int axis_divisor[2] = {-1, -1};
  int multiplicity = 0;
  int conjugates = 1;
  int divisor = -1;  ///< divisor created here, -1 when the point was not blown up
  std::vector<int> children;
  /// For leaves recorded without coordinates: the irreducible direction polynomial.
  std::string direction;

  bool blown_up() const { return divisor >= 0; }
  bool lies_on(int div) const { return axis_divisor[0] == div || axis_divisor[1] == div; }
};

struct Branch {
  int leaf = 0;              ///< NearPoint id where the strict transform is SNC
  std::vector<int> centers;  ///< blown-up points the branch passes through, root first
  std::vector<int> multiplicities;  ///< branch multiplicity at each center
  int copies = 1;
};

enum class ResolutionStatus { Resolved, ExtensionLimit };

struct ResolutionTree {
  std::vector<DivisorRecord> divisors;
  std::vector<NearPoint> points;
  std::vector<Branch> branches;
  ResolutionStatus status = ResolutionStatus::Resolved;
  std::string note;

  int branch_count() const;
  /// Zero-based: the root of the tree is points[0].
  const NearPoint& root() const { return points.front(); }
};

/// One point of the strict transform on the new exceptional line.
struct BlowUpChild {
  /// "t=<c>" for the chart v = u*t, "inf" for the chart u = s*v.
  std::string direction;
  CurveGerm child;
  int conjugates = 1;  ///< relative to the blown-up point
};

/// Single blow-up of the origin; directions over the germ's field, extending Q once if needed.
std::vector<BlowUpChild> blow_up(const CurveGerm& g, const EngineOptions& options = {});

/// Minimal embedded resolution of the germ at the origin.
ResolutionTree resolve(const CurveGerm& g, const EngineOptions& options = {});

/// Canonical equisingularity data derived from a resolution.
struct EquisingularityType {
  /// Canonical encoding of the weighted tree with proximities; equal codes
  /// mean equisingular germs.
  std::string code;
  /// One entry per branch copy, sorted.
  std::vector<std::vector<int>> multiplicity_sequences;
  /// Intersection multiplicities between branch copies (same order as the sequences).
  std::vector<std::vector<int>> contacts;
  /// Pairs (q, p) of blown-up points with q proximate to p.
  std::vector<std::pair<int, int>> proximities;

  friend bool operator==(const EquisingularityType& a, const EquisingularityType& b) { return a.code == b.code; }
};

EquisingularityType equisingularity_type(const ResolutionTree& t);
EquisingularityType equisingularity_type(const CurveGerm& g, const EngineOptions& options = {});
int branch_count(const CurveGerm& g, const EngineOptions& options = {});

}  // namespace curvelab
