#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvelab/qpoly.hpp"
#include "curvelab/rational.hpp"

namespace curvelab {

class NumberField;
/// Shared handle to a simple extension Q(a); nullptr stands for Q itself.
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(a) = Q[t]/(m(t)) for a monic irreducible m.
class NumberField {
 public:
  /// Verifies that `min_poly` is irreducible over Q. A linear minimal
  /// polynomial yields nullptr (the field Q).
  static FieldPtr make(const QPoly& min_poly);
  /// For callers that obtained `min_poly` from a factorization.
  static FieldPtr make_unchecked(const QPoly& min_poly);

  int degree() const noexcept { return static_cast<int>(min_poly_.degree()); }
  const QPoly& min_poly() const noexcept { return min_poly_; }

  /// Reduction of t^k for degree() <= k < 2*degree()-1 in the power basis.
  const std::vector<Rational>& power_reduction(int k) const { return reductions_[k - degree()]; }

  std::string describe() const { return min_poly_.str("a"); }

 private:
  explicit NumberField(QPoly min_poly);

  QPoly min_poly_;
  std::vector<std::vector<Rational>> reductions_;
};

int field_degree(const FieldPtr& field) noexcept;
bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
/// The smaller field containing both; throws ExtensionLimit for two distinct
/// proper extensions (towers are not supported).
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Element of Q or of a simple extension Q(a), stored in the power basis.
class FieldElement {
 public:
  FieldElement() : coords_{Rational()} {}
  FieldElement(const Rational& r) : coords_{r} {}      // NOLINT(google-explicit-constructor)
  FieldElement(long v) : coords_{Rational(v)} {}        // NOLINT
  FieldElement(int v) : coords_{Rational(v)} {}         // NOLINT
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  /// The generator a of `field`.
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Throws InvalidArgument if the element is not in Q.
  Rational rational_value() const;
  /// Rational elements are re-homed to Q (field() == nullptr).
  FieldElement canonical() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  /// "p/q" for rationals, "(c0 + c1*a + ...)" otherwise.
  std::string str() const;
  /// Total order usable for canonical sorting (not a field order).
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

 private:
  void promote_to(const FieldPtr& field);

  FieldPtr field_;
  std::vector<Rational> coords_;
};

FieldPtr common_field(const FieldElement& a, const FieldElement& b);

}  // namespace curvelab
