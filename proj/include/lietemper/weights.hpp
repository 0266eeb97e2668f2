#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lietemper/lie_algebra.hpp"
#include "lietemper/linalg.hpp"
#include "lietemper/polynomial.hpp"

namespace lietemper {

enum class EigenStatus { Ok, NotDiagonalizable, NonRealEigenvalues, IrrationalEigenvalues };

struct EigenDecomposition {
  EigenStatus status = EigenStatus::Ok;
  Poly charpoly;
  std::vector<Rat> eigenvalues;     // distinct rational eigenvalues, ascending
  std::vector<Subspace> eigenspaces;  // parallel to eigenvalues
};

/// Exact eigen-decomposition over Q. Status is Ok iff the matrix is
/// diagonalizable with all eigenvalues rational.
EigenDecomposition rational_eigen(const Matrix& a);

using SubalgebraPtr = std::shared_ptr<const SubalgebraEmbedding>;

/// Abelian subalgebra a of h whose elements act on g diagonalizably over Q.
class SplitTorus {
 public:
  const SubalgebraPtr& parent() const { return parent_; }
  const LieAlgebra& ambient() const { return parent_->algebra(); }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// g-coordinates of sum_i y_i a_i.
  Vec element(const Vec& torus_coords) const;

 private:
  friend SplitTorus validate_torus(const std::vector<Vec>&, const SubalgebraPtr&);
  SplitTorus(SubalgebraPtr parent, std::vector<Vec> basis) : parent_(std::move(parent)), basis_(std::move(basis)) {}
  SubalgebraPtr parent_;
  std::vector<Vec> basis_;
};

/// Throws NotInSubalgebra, NotAbelian, NotSplit or IrrationalWeights naming the offending row.
SplitTorus validate_torus(const std::vector<Vec>& candidate, const SubalgebraPtr& h);

/// Adjoins pool vectors (or their components commuting with the current torus)
/// while all torus invariants hold. Maximal relative to the pool only.
SplitTorus extend_torus_greedily(const SplitTorus& seed, const SubalgebraPtr& h, const std::vector<Vec>& pool);

enum class Space { H, GModH, G };
const char* space_label(Space s);

/// Matrices of the torus basis elements acting on the chosen space:
/// h in its own basis, g/h in the complement basis, g in the standard basis.
struct SpaceAction {
  Space space;
  std::size_t dim = 0;
  std::vector<Vec> complement;  // only for g/h
  std::vector<Matrix> generators;
};
SpaceAction space_action(const SplitTorus& a, Space space, const std::optional<std::vector<Vec>>& complement = std::nullopt);
/// Action matrix of sum_i y_i a_i on the space.
Matrix action_matrix(const SpaceAction& action, const Vec& torus_coords);

struct Weight {
  Vec form;  // eigenvalue of each torus basis element
  std::size_t multiplicity = 0;
  Subspace space;  // in the coordinates of the decomposed space
};

struct WeightSystem {
  std::string space_label;
  std::size_t rank = 0;
  std::size_t space_dim = 0;
  std::vector<Weight> weights;  // sorted by form
};

WeightSystem weight_decomposition(const SplitTorus& a, Space space,
                                  const std::optional<std::vector<Vec>>& complement = std::nullopt);
WeightSystem weight_decomposition(const SpaceAction& action, std::size_t rank);

struct RhoForm {
  Vec form;
  std::size_t multiplicity = 0;
  friend bool operator==(const RhoForm&, const RhoForm&) = default;
};

/// Y -> sum_i m_i |lambda_i(Y)| on a torus of the given rank.
struct RhoFunction {
  std::size_t rank = 0;
  std::vector<RhoForm> forms;  // nonzero forms only
  friend bool operator==(const RhoFunction&, const RhoFunction&) = default;
};

RhoFunction rho_from_weights(const WeightSystem& ws);
Rat rho_eval(const RhoFunction& f, const Vec& y);
/// q * f (same forms, multiplicities unchanged, forms scaled).
RhoFunction rho_scaled(const RhoFunction& f, const Rat& q);

}  // namespace lietemper
