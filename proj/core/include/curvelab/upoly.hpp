#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvelab/number_field.hpp"
#include "curvelab/qpoly.hpp"

namespace curvelab {

/// Dense univariate polynomial over Q or Q(a), constant term first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElement> coeffs);
  explicit UPoly(const QPoly& p);

  static UPoly constant(const FieldElement& v) { return UPoly(std::vector<FieldElement>{v}); }
  /// The polynomial t - root.
  static UPoly linear_root(const FieldElement& root);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  FieldElement coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : FieldElement(); }
  const FieldElement& lead() const { return c_.back(); }
  /// Common field of all coefficients.
  FieldPtr field() const;
  bool is_rational() const;
  QPoly to_qpoly() const;

  UPoly monic() const;
  UPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  UPoly shifted(const FieldElement& shift) const;

  std::string str(const std::string& var = "t") const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const FieldElement& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<FieldElement> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& a, unsigned e);

}  // namespace curvelab
