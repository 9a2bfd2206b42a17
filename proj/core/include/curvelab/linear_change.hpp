#pragma once

#include <vector>

#include "curvelab/mpoly.hpp"

namespace curvelab {

using Matrix = std::vector<std::vector<FieldElement>>;

/// Invertible linear substitution X -> M X with its exact inverse.
class LinearChange {
 public:
  LinearChange() = default;
  /// Throws InvalidArgument for a singular or non-square matrix.
  explicit LinearChange(Matrix m);

  static LinearChange identity(int n);
  static LinearChange permutation(const std::vector<int>& image);

  int dim() const noexcept { return static_cast<int>(m_.size()); }
  const Matrix& matrix() const noexcept { return m_; }
  const Matrix& inverse_matrix() const noexcept { return inv_; }
  LinearChange inverse() const;
  /// (this * other)(X) = this(other(X)), matrix product M_this * M_other.
  LinearChange then(const LinearChange& other) const;

  /// M v
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  /// M^{-1} v
  std::vector<FieldElement> apply_inverse(const std::vector<FieldElement>& v) const;

  FieldPtr field() const;

 private:
  Matrix m_, inv_;
};

/// q(X) = p(M X): each variable x_i is replaced by sum_j M_ij x_j.
MPoly apply_linear_change(const MPoly& p, const LinearChange& t);

/// Inverse of a square matrix over a field; empty when singular.
Matrix invert(const Matrix& m);
FieldElement determinant(Matrix m);

}  // namespace curvelab
