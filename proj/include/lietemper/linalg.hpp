#pragma once

#include <optional>
#include <vector>

#include "lietemper/rational.hpp"

namespace lietemper {

struct RrefResult {
  Matrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

/// Reduced row echelon form; zero rows dropped.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vec>& rows, std::size_t cols);
Rat determinant(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in canonical order.
std::vector<Vec> kernel(const Matrix& m);

/// Some x with m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Linear subspace of Q^n, stored as its canonical reduced row echelon basis.
/// Two subspaces are equal iff their stored matrices are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis, nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Some complement basis made of standard unit vectors (non-pivot columns).
  std::vector<Vec> unit_complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
std::size_t subspace_rank(const Subspace& a);

/// Expresses vectors in a fixed (not necessarily canonical) basis of a subspace.
class BasisCoordinates {
 public:
  BasisCoordinates(const std::vector<Vec>& basis, std::size_t ambient);
  std::optional<Vec> coordinates(const Vec& v) const;
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  std::vector<Vec> basis_;
  std::size_t ambient_;
  std::vector<std::size_t> pivot_cols_;
  Matrix inverse_;  // inverse of the basis restricted to pivot_cols_
};

}  // namespace lietemper
