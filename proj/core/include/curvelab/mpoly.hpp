#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvelab/number_field.hpp"
#include "curvelab/upoly.hpp"

namespace curvelab {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q or one simple extension Q(a).
///
/// Terms are kept in a map keyed by exponent vectors (lexicographic order,
/// first variable most significant); zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, FieldElement>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(std::vector<std::string> vars, const FieldElement& value);
  static MPoly variable(std::vector<std::string> vars, int index);
  static MPoly monomial(std::vector<std::string> vars, Exponent e, const FieldElement& value);
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static MPoly from_univariate(std::vector<std::string> vars, int index, const UPoly& p);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  int nvars() const noexcept { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term (the order at the origin); -1 for zero.
  int order() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool involves(int var) const { return degree_in(var) > 0; }

  FieldElement coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const FieldElement& c);

  /// Common coefficient field.
  FieldPtr field() const;
  bool is_rational() const;

  /// Sum of the terms of total degree k.
  MPoly homogeneous_part(int k) const;
  MPoly derivative(int var) const;
  FieldElement eval(const std::vector<FieldElement>& point) const;
  /// Substitutes a value for one variable; the variable list is unchanged.
  MPoly substitute(int var, const FieldElement& value) const;
  /// Replaces variable i by images[i]; all images share one variable list.
  MPoly compose(const std::vector<MPoly>& images) const;
  /// Same polynomial, variables renamed (count must match).
  MPoly renamed(std::vector<std::string> vars) const;
  /// Coefficients with respect to `var`: p = sum_k c[k] * var^k.
  std::vector<MPoly> coefficients_in(int var) const;
  /// Requires that only `var` occurs.
  UPoly to_univariate(int var) const;

  /// Lexicographically largest exponent (requires nonzero).
  const Exponent& lead_exponent() const { return terms_.rbegin()->first; }
  const FieldElement& lead_coeff() const { return terms_.rbegin()->second; }

  /// Canonical scalar multiple: over Q integer coefficients with content 1
  /// and positive leading coefficient, over Q(a) leading coefficient 1.
  /// "Leading" refers to the highest total degree, then lexicographic order.
  MPoly normalized() const;

  /// Terms by decreasing total degree, then decreasing lexicographic order.
  std::string str() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const FieldElement& s);
  friend MPoly operator*(const FieldElement& s, const MPoly& a) { return a * s; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned e);

/// Exact division; throws InvalidArgument when b does not divide a.
MPoly exact_divide(const MPoly& a, const MPoly& b);
/// Division returning false instead of throwing.
bool try_divide(const MPoly& a, const MPoly& b, MPoly& quotient);

}  // namespace curvelab
