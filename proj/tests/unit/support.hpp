#pragma once

#include <doctest.h>

#include <functional>
#include <optional>
#include <random>
#include <string>

#include "curvelab/curvelab.hpp"

namespace curvelab::test {

inline PlaneCurve curve(const std::string& text) { return PlaneCurve::parse(text); }

inline ProjPoint pt(const std::string& text) { return ProjPoint::from_rationals(parse_point(text)); }

inline CurveGerm germ(const std::string& text) { return make_germ(parse_polynomial(text, germ_vars())); }

inline MPoly germ_poly(const std::string& text) { return parse_polynomial(text, germ_vars()); }

/// Error code thrown by `f`, or nothing when it returns normally.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Invertible n x n matrix with entries in [-2, 2].
inline LinearChange random_change(std::mt19937_64& rng, int n = 3) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    Matrix m(n, std::vector<FieldElement>(n));
    for (auto& row : m)
      for (auto& x : row) x = FieldElement(entry(rng));
    if (!determinant(m).is_zero()) return LinearChange(m);
  }
}

/// The curve f(M X) together with the image M^{-1} p of a point.
struct Moved {
  PlaneCurve curve;
  ProjPoint point;
};

inline Moved move(const PlaneCurve& c, const ProjPoint& p, const LinearChange& t) {
  return {PlaneCurve(apply_linear_change(c.form(), t)), ProjPoint(t.apply_inverse(p.coords()))};
}

}  // namespace curvelab::test
