#pragma once

#include <vector>

#include "curvelab/qpoly.hpp"
#include "curvelab/upoly.hpp"

namespace curvelab {

struct QFactor {
  QPoly factor;  // monic
  int multiplicity = 1;
};

struct KFactor {
  UPoly factor;  // monic over the input's field
  int multiplicity = 1;
};

/// Complete factorization over Q into monic irreducibles (the unit is dropped).
/// Square-free decomposition followed by Zassenhaus: modular factorization,
/// quadratic Hensel lifting and factor recombination.
std::vector<QFactor> factor_rational(const QPoly& p);

/// Yun's square-free decomposition over Q: p = unit * prod f_i^i.
std::vector<QFactor> squarefree_decomposition(const QPoly& p);
std::vector<KFactor> squarefree_decomposition(const UPoly& p);

/// Factorization over the coefficient field of `p` (Q or one Q(a)); over a
/// proper extension this uses the norm reduction to Q.
std::vector<KFactor> factor_univariate(const UPoly& p);
/// Factorization over `field`, which must contain the coefficients of `p`.
std::vector<KFactor> factor_univariate(const UPoly& p, const FieldPtr& field);

/// Norm_{K/Q} of a field element.
Rational field_norm(const FieldElement& x);

/// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

namespace detail {
/// Returns true when gcd(a, b) over Q is certainly 1 (modular certificate).
bool coprime_certificate(const QPoly& a, const QPoly& b);
/// Monic gcd over Q by small-prime images and Chinese remaindering.
QPoly modular_gcd(const QPoly& a, const QPoly& b);
}  // namespace detail

}  // namespace curvelab
