#pragma once

#include <vector>

#include "curvelab/mpoly.hpp"

namespace curvelab {

/// Sylvester resultant with respect to `var`, using the actual degrees of p
/// and q in `var`. Other variables are handled by evaluation and
/// interpolation.
MPoly resultant(const MPoly& p, const MPoly& q, int var);

/// Multivariate gcd (recursive primitive remainder sequences), normalized.
MPoly gcd(const MPoly& a, const MPoly& b);

struct SquarefreeResult {
  MPoly squarefree;
  bool is_reduced = true;
};

/// p divided by gcd(p, all partial derivatives), normalized.
SquarefreeResult squarefree_part(const MPoly& p);

// ---------------------------------------------------------------- solving

enum class SolveStatus {
  Complete,      ///< every common zero is listed
  Truncated,     ///< some coordinate needs an extension above the degree bound
  NeedsTower,    ///< some coordinate needs a second extension
  Positive,      ///< the zero set is positive dimensional (points holds a sample when known)
  Inconclusive,  ///< a projection step produced a positive-dimensional eliminant
};

struct SolveOptions {
  int max_extension_degree = 6;
  /// Resultant pairs per elimination step before falling back to all pairs.
  int resultant_pairs = 3;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Complete;
  /// One representative per Galois orbit; coordinates share a single field.
  std::vector<std::vector<FieldElement>> points;
};

/// Common zeros over Q-bar of rational polynomials in all their variables.
/// Points whose coordinates generate an extension of degree <= the bound are
/// returned; a point over Q(a) stands for its [Q(a):Q] conjugates.
SolveResult solve_system(const std::vector<MPoly>& polys, const SolveOptions& options = {});

/// Shears variable 0 by multiples of the last variable until the solver
/// needs no tower; points are mapped back to the original coordinates.
SolveResult solve_system_sheared(const std::vector<MPoly>& polys, const SolveOptions& options = {});

}  // namespace curvelab
