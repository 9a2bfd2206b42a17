#include "curvelab/linear_change.hpp"

#include "curvelab/error.hpp"

namespace curvelab {

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = FieldElement(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const FieldElement s = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const FieldElement f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  for (auto& row : inv)
    for (auto& x : row) x = x.canonical();
  return inv;
}

FieldElement determinant(Matrix a) {
  const std::size_t n = a.size();
  FieldElement det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return FieldElement();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const FieldElement inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const FieldElement f = a[r][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det.canonical();
}

LinearChange::LinearChange(Matrix m) : m_(std::move(m)) {
  for (const auto& row : m_)
    if (row.size() != m_.size()) fail(ErrorCode::InvalidArgument, "linear change needs a square matrix");
  for (auto& row : m_)
    for (auto& x : row) x = x.canonical();
  inv_ = invert(m_);
  if (inv_.empty() && !m_.empty()) fail(ErrorCode::InvalidArgument, "linear change matrix is singular");
}

LinearChange LinearChange::identity(int n) {
  Matrix m(n, std::vector<FieldElement>(n));
  for (int i = 0; i < n; ++i) m[i][i] = FieldElement(1);
  return LinearChange(std::move(m));
}

LinearChange LinearChange::permutation(const std::vector<int>& image) {
  const std::size_t n = image.size();
  Matrix m(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][image[i]] = FieldElement(1);
  return LinearChange(std::move(m));
}

LinearChange LinearChange::inverse() const {
  LinearChange r;
  r.m_ = inv_;
  r.inv_ = m_;
  return r;
}

LinearChange LinearChange::then(const LinearChange& other) const {
  if (other.dim() != dim()) fail(ErrorCode::DimensionMismatch, "composing linear changes of different size");
  const int n = dim();
  Matrix p(n, std::vector<FieldElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p[i][j] += m_[i][k] * other.m_[k][j];
  return LinearChange(std::move(p));
}

namespace {
std::vector<FieldElement> mat_vec(const Matrix& m, const std::vector<FieldElement>& v) {
  if (v.size() != m.size()) fail(ErrorCode::DimensionMismatch, "vector length differs from matrix size");
  std::vector<FieldElement> out(v.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    out[i] = out[i].canonical();
  }
  return out;
}
}  // namespace

std::vector<FieldElement> LinearChange::apply(const std::vector<FieldElement>& v) const { return mat_vec(m_, v); }

std::vector<FieldElement> LinearChange::apply_inverse(const std::vector<FieldElement>& v) const {
  return mat_vec(inv_, v);
}

FieldPtr LinearChange::field() const {
  FieldPtr f;
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_rational()) f = common_field(f, x.field());
  return f;
}

MPoly apply_linear_change(const MPoly& p, const LinearChange& t) {
  if (t.dim() != p.nvars())
    fail(ErrorCode::DimensionMismatch, "linear change of size " + std::to_string(t.dim()) + " applied to " +
                                           std::to_string(p.nvars()) + " variables");
  std::vector<MPoly> images;
  images.reserve(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    MPoly img(p.vars());
    for (int j = 0; j < p.nvars(); ++j) img += MPoly::variable(p.vars(), j) * t.matrix()[i][j];
    images.push_back(std::move(img));
  }
  return p.compose(images);
}

}  // namespace curvelab
