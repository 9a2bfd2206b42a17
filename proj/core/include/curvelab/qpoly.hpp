#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvelab/rational.hpp"

namespace curvelab {

/// Dense univariate polynomial over Q, coefficients from the constant term up.
/// The zero polynomial has no coefficients.
struct QPoly {
  std::vector<Rational> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  static QPoly constant(const Rational& v) { return QPoly({v}); }
  static QPoly monomial(const Rational& v, int exponent);

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rational& lead() const { return c.back(); }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rational(); }

  QPoly monic() const;
  QPoly derivative() const;
  Rational eval(const Rational& x) const;
  /// p(x + shift)
  QPoly shifted(const Rational& shift) const;

  std::string str(const std::string& var = "t") const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const Rational& s);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0,0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct QExtendedGcd {
  QPoly g, s, t;
};
QExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);
QPoly pow(const QPoly& a, unsigned e);

}  // namespace curvelab
