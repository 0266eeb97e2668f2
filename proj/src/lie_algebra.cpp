#include "lietemper/lie_algebra.hpp"

#include <set>

#include "lietemper/error.hpp"

namespace lietemper {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Rat> constants)
    : name_(std::move(name)), labels_(std::move(labels)), constants_(std::move(constants)) {
  const std::size_t n = labels_.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "Lie algebra must have positive dimension");
  if (constants_.size() != n * n * n)
    fail(ErrorCode::DimensionMismatch, "structure constants must have dim^3 entries");
  sparse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(constant(i, j, k)) != 0) sparse_[i * n + j].push_back({k, constant(i, j, k)});
}

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<std::string> labels, std::vector<Matrix> basis) {
  const std::size_t n = basis.size();
  if (n == 0 || labels.size() != n) fail(ErrorCode::InvalidArgument, "from_matrices: need one label per basis matrix");
  const std::size_t m = basis[0].rows();
  auto flatten = [m](const Matrix& a) {
    Vec v(m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) v[r * m + c] = a(r, c);
    return v;
  };
  std::vector<Vec> flat;
  for (const auto& b : basis) {
    if (b.rows() != m || b.cols() != m) fail(ErrorCode::DimensionMismatch, "from_matrices: matrices must share a square shape");
    flat.push_back(flatten(b));
  }
  BasisCoordinates coords(flat, m * m);
  std::vector<Rat> constants(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = coords.coordinates(flatten(commutator(basis[i], basis[j])));
      if (!c) fail(ErrorCode::ValidationError, "from_matrices: [" + labels[i] + ", " + labels[j] + "] leaves the span");
      for (std::size_t k = 0; k < n; ++k) {
        constants[(i * n + j) * n + k] = (*c)[k];
        constants[(j * n + i) * n + k] = -(*c)[k];
      }
    }
  LieAlgebra g(std::move(name), std::move(labels), std::move(constants));
  g.realization_ = std::move(basis);
  return g;
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

void LieAlgebra::set_realization(std::vector<Matrix> matrices) {
  if (matrices.size() != dim()) fail(ErrorCode::DimensionMismatch, "realization needs one matrix per basis element");
  realization_ = std::move(matrices);
}

void LieAlgebra::set_complex_structure(Matrix j) {
  if (j.rows() != dim() || j.cols() != dim()) fail(ErrorCode::DimensionMismatch, "complex structure must be dim x dim");
  complex_structure_ = std::move(j);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) fail(ErrorCode::DimensionMismatch, "bracket: vector length must equal dim");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& terms = sparse_[i * n + j];
      if (terms.empty()) continue;
      Rat xy = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& y) const {
  const std::size_t n = dim();
  if (y.size() != n) fail(ErrorCode::DimensionMismatch, "ad: vector length must equal dim");
  Matrix m(n, n);
  // column j = [y, e_j]
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(y[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : sparse_[i * n + j]) m(t.index, j) += y[i] * t.coeff;
  }
  return m;
}

Matrix LieAlgebra::realize(const Vec& x) const {
  if (!realization_) fail(ErrorCode::InvalidArgument, "algebra " + name_ + " has no matrix realization");
  if (x.size() != dim()) fail(ErrorCode::DimensionMismatch, "realize: vector length must equal dim");
  const auto& mats = *realization_;
  Matrix m(mats[0].rows(), mats[0].cols());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * mats[i];
  return m;
}

ValidationReport validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ValidationReport rep;
  auto violation = [&rep](std::string kind, std::vector<std::size_t> idx, std::string msg) {
    rep.ok = false;
    rep.kind = std::move(kind);
    rep.indices = std::move(idx);
    rep.message = std::move(msg);
    return rep;
  };

  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.insert(g.labels()[i]).second)
      return violation("labels", {i}, "duplicate basis label '" + g.labels()[i] + "'");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.constant(i, j, k) != -g.constant(j, i, k))
          return violation("antisymmetry", {i, j, k},
                           "c[" + g.labels()[i] + "][" + g.labels()[j] + "][" + g.labels()[k] +
                               "] != -c[" + g.labels()[j] + "][" + g.labels()[i] + "][" + g.labels()[k] + "]");

  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  Vec acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rat(0));
        auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
          for (const auto& t : g.bracket_terms(a, b))
            for (const auto& u : g.bracket_terms(t.index, c)) acc[u.index] += t.coeff * u.coeff;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        if (!is_zero(acc))
          return violation("jacobi", {i, j, k},
                           "Jacobi identity fails for (" + g.labels()[i] + ", " + g.labels()[j] + ", " +
                               g.labels()[k] + ")");
      }

  if (const auto& real = g.realization()) {
    const std::size_t m = (*real)[0].rows();
    for (std::size_t i = 0; i < n; ++i)
      if ((*real)[i].rows() != m || (*real)[i].cols() != m)
        return violation("realization", {i}, "realization matrices must share a square shape");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Matrix expect(m, m);
        for (const auto& t : g.bracket_terms(i, j)) expect = expect + t.coeff * (*real)[t.index];
        if (commutator((*real)[i], (*real)[j]) != expect)
          return violation("realization", {i, j},
                           "matrix commutator [M_" + g.labels()[i] + ", M_" + g.labels()[j] +
                               "] does not match the structure constants");
      }
  }

  if (const auto& J = g.complex_structure()) {
    Matrix sq = (*J) * (*J);
    if (sq != Rat(-1) * Matrix::identity(n)) return violation("complex_structure", {}, "J*J != -1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
        if (J->apply(g.bracket(ei, ej)) != g.bracket(J->apply(ei), ej))
          return violation("complex_structure", {i, j},
                           "J[e_i, e_j] != [J e_i, e_j] at (" + g.labels()[i] + ", " + g.labels()[j] + ")");
      }
  }
  return rep;
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(unit_vec(n, i)));
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(ads[i](r, c)) != 0 && sgn(ads[j](c, r)) != 0) t += ads[i](r, c) * ads[j](c, r);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

std::optional<std::pair<std::size_t, std::size_t>> closure_violation(const LieAlgebra& g, const std::vector<Vec>& rows) {
  Subspace span = Subspace::span(rows, g.dim());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!span.contains(g.bracket(rows[i], rows[j]))) return std::make_pair(i, j);
  return std::nullopt;
}

namespace {

std::vector<Vec> checked_rows(const LieAlgebra& g, std::vector<Vec> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != g.dim())
      fail(ErrorCode::DimensionMismatch, "subalgebra row " + std::to_string(i) + " has wrong length");
  if (rank(rows, g.dim()) != rows.size())
    fail(ErrorCode::ValidationError, "subalgebra rows are linearly dependent");
  if (auto bad = closure_violation(g, rows))
    fail(ErrorCode::ValidationError, "subalgebra not closed under bracket: [row " + std::to_string(bad->first) +
                                         ", row " + std::to_string(bad->second) + "] leaves the span");
  return rows;
}

}  // namespace

SubalgebraEmbedding::SubalgebraEmbedding(LieAlgebraPtr ambient, std::vector<Vec> basis)
    : ambient_(std::move(ambient)),
      basis_(checked_rows(*ambient_, std::move(basis))),
      span_(Subspace::span(basis_, ambient_->dim())),
      coords_(basis_, ambient_->dim()) {}

Matrix SubalgebraEmbedding::restricted_ad(const Vec& y) const {
  const std::size_t k = dim();
  Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = coordinates(ambient_->bracket(y, basis_[j]));
    if (!c) fail(ErrorCode::NotInSubalgebra, "restricted_ad: element does not normalize the subalgebra");
    for (std::size_t i = 0; i < k; ++i) m(i, j) = (*c)[i];
  }
  return m;
}

}  // namespace lietemper
