#include "lietemper/linalg.hpp"

#include <utility>

#include "lietemper/error.hpp"

namespace lietemper {

namespace {

// In-place Gauss-Jordan on a row list. Returns pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(rows[r][k]) != 0) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(rows[r][k]) != 0) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  auto rows = m.row_list();
  auto pivots = gauss_jordan(rows, m.cols());
  return {Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<Vec>& rows, std::size_t cols) {
  auto copy = rows;
  for (const auto& v : copy)
    if (v.size() != cols) fail(ErrorCode::DimensionMismatch, "rank: row length mismatch");
  return gauss_jordan(copy, cols).size();
}

Rat determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  auto a = m.row_list();
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k)
        if (sgn(a[c][k]) != 0) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<Vec> kernel(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, m.cols());
  return x;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  auto rows = vectors;
  for (const auto& v : rows)
    if (v.size() != ambient) fail(ErrorCode::DimensionMismatch, "span: vector length mismatch");
  s.pivots_ = gauss_jordan(rows, ambient);
  s.basis_ = Matrix::from_rows(rows, ambient);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vec(ambient, i));
  return span(units, ambient);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "coordinates: vector length mismatch");
  // In RREF the coordinate on row r is the entry of v at that row's pivot.
  Vec coords(dim());
  Vec residual = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    coords[r] = v[pivots_[r]];
    if (sgn(coords[r]) != 0)
      for (std::size_t c = 0; c < ambient_; ++c)
        if (sgn(basis_(r, c)) != 0) residual[c] -= coords[r] * basis_(r, c);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::DimensionMismatch, "contains: ambient mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<Vec> Subspace::unit_complement() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) out.push_back(unit_vec(ambient_, c));
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(ErrorCode::DimensionMismatch, "subspace_sum: ambient mismatch");
  auto rows = a.vectors();
  for (auto& v : b.vectors()) rows.push_back(std::move(v));
  return Subspace::span(rows, a.ambient());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(ErrorCode::DimensionMismatch, "subspace_intersect: ambient mismatch");
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Solve sum_i x_i a_i = sum_j y_j b_j: kernel of the (n x (da+db)) system.
  const std::size_t da = a.dim(), db = b.dim();
  Matrix sys(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t c = 0; c < n; ++c) sys(c, i) = a.basis()(i, c);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t c = 0; c < n; ++c) sys(c, da + j) = b.basis()(j, c);
  std::vector<Vec> out;
  for (const auto& k : kernel(sys)) {
    Vec v(n);
    for (std::size_t i = 0; i < da; ++i)
      if (sgn(k[i]) != 0) axpy(v, k[i], a.basis().row(i));
    out.push_back(std::move(v));
  }
  return Subspace::span(out, n);
}

std::size_t subspace_rank(const Subspace& a) { return a.dim(); }

BasisCoordinates::BasisCoordinates(const std::vector<Vec>& basis, std::size_t ambient)
    : basis_(basis), ambient_(ambient) {
  const std::size_t k = basis.size();
  // Pick k columns on which the basis is invertible: pivots of the RREF of the basis rows.
  auto rows = basis;
  for (const auto& v : rows)
    if (v.size() != ambient) fail(ErrorCode::DimensionMismatch, "BasisCoordinates: vector length mismatch");
  pivot_cols_ = gauss_jordan(rows, ambient);
  if (pivot_cols_.size() != k) fail(ErrorCode::ValidationError, "BasisCoordinates: basis vectors are linearly dependent");
  Matrix restricted(k, k);  // restricted(i, j) = basis[i][pivot_j]
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) restricted(i, j) = basis[i][pivot_cols_[j]];
  // Invert via Gauss-Jordan on [restricted | I].
  std::vector<Vec> aug(k, Vec(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = restricted(i, j);
    aug[i][k + i] = 1;
  }
  gauss_jordan(aug, 2 * k);
  inverse_ = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inverse_(i, j) = aug[i][k + j];
}

std::optional<Vec> BasisCoordinates::coordinates(const Vec& v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "coordinates: vector length mismatch");
  const std::size_t k = basis_.size();
  // coords * restricted = v|pivots  =>  coords = v|pivots * inverse
  Vec coords(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Rat& x = v[pivot_cols_[j]];
    if (sgn(x) == 0) continue;
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(inverse_(j, i)) != 0) coords[i] += x * inverse_(j, i);
  }
  Vec back(ambient_);
  for (std::size_t i = 0; i < k; ++i) axpy(back, coords[i], basis_[i]);
  if (back != v) return std::nullopt;
  return coords;
}

}  // namespace lietemper
