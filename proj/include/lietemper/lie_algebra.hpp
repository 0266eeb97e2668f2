#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lietemper/linalg.hpp"
#include "lietemper/rational.hpp"

namespace lietemper {

/// Finite-dimensional real Lie algebra given by rational structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Immutable after construction.
class LieAlgebra {
 public:
  struct Term {
    std::size_t index;
    Rat coeff;
  };

  LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Rat> constants);

  /// Structure constants of the matrix span of `basis` (must be linearly
  /// independent and closed under commutator). Keeps the matrices as realization.
  static LieAlgebra from_matrices(std::string name, std::vector<std::string> labels, std::vector<Matrix> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Rat& constant(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim() + j) * dim() + k]; }
  const std::vector<Rat>& constants() const { return constants_; }
  /// Nonzero terms of [e_i, e_j].
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }

  const std::optional<std::vector<Matrix>>& realization() const { return realization_; }
  void set_realization(std::vector<Matrix> matrices);
  /// Column j holds the coordinates of J e_j.
  const std::optional<Matrix>& complex_structure() const { return complex_structure_; }
  void set_complex_structure(Matrix j);

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of x -> [y, x].
  Matrix ad(const Vec& y) const;
  /// Matrix of the basis element realization for a coordinate vector.
  Matrix realize(const Vec& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.constants_ == b.constants_ && a.realization_ == b.realization_ &&
           a.complex_structure_ == b.complex_structure_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Rat> constants_;
  std::vector<std::vector<Term>> sparse_;
  std::optional<std::vector<Matrix>> realization_;
  std::optional<Matrix> complex_structure_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct ValidationReport {
  bool ok = true;
  std::string kind;                  // "antisymmetry", "jacobi", "realization", ...
  std::vector<std::size_t> indices;  // first violating index tuple
  std::string message;
};

/// Checks every LieAlgebra invariant; reports the first violation found.
ValidationReport validate(const LieAlgebra& algebra);

/// Killing form matrix B(e_i, e_j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& algebra);

/// h inside g, as rows of g-coordinates.
class SubalgebraEmbedding {
 public:
  /// Throws ValidationError on dependent rows or missing bracket closure.
  SubalgebraEmbedding(LieAlgebraPtr ambient, std::vector<Vec> basis);

  const LieAlgebraPtr& ambient() const { return ambient_; }
  const LieAlgebra& algebra() const { return *ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }
  /// Coordinates of a g-vector in the h-basis (nullopt if outside h).
  std::optional<Vec> coordinates(const Vec& v) const { return coords_.coordinates(v); }
  /// Matrix of ad(y) restricted to h, in the h-basis. y must lie in h.
  Matrix restricted_ad(const Vec& y) const;

 private:
  LieAlgebraPtr ambient_;
  std::vector<Vec> basis_;
  Subspace span_;
  BasisCoordinates coords_;
};

/// Finds the first pair of rows whose bracket leaves the span, if any.
std::optional<std::pair<std::size_t, std::size_t>> closure_violation(const LieAlgebra& g, const std::vector<Vec>& rows);

}  // namespace lietemper
