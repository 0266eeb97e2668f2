#include "lietemper/weights.hpp"

#include <algorithm>

#include "lietemper/error.hpp"

namespace lietemper {

EigenDecomposition rational_eigen(const Matrix& a) {
  EigenDecomposition out;
  const std::size_t n = a.rows();
  out.charpoly = characteristic_polynomial(a);
  auto rr = rational_roots(squarefree_part(out.charpoly));
  if (rr.residual.degree() > 0) {
    out.status = count_real_roots(rr.residual) > 0 ? EigenStatus::IrrationalEigenvalues : EigenStatus::NonRealEigenvalues;
    return out;
  }
  std::size_t total = 0;
  for (const auto& lambda : rr.roots) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Subspace e = Subspace::span(kernel(shifted), n);
    total += e.dim();
    out.eigenvalues.push_back(lambda);
    out.eigenspaces.push_back(std::move(e));
  }
  if (total != n) out.status = EigenStatus::NotDiagonalizable;
  return out;
}

Vec SplitTorus::element(const Vec& torus_coords) const {
  if (torus_coords.size() != rank()) fail(ErrorCode::DimensionMismatch, "torus element: coordinate count must equal rank");
  Vec v(ambient().dim());
  for (std::size_t i = 0; i < rank(); ++i) axpy(v, torus_coords[i], basis_[i]);
  return v;
}

namespace {

void require_split(const LieAlgebra& g, const Vec& y, const std::string& what) {
  auto eig = rational_eigen(g.ad(y));
  switch (eig.status) {
    case EigenStatus::Ok: return;
    case EigenStatus::IrrationalEigenvalues:
      fail(ErrorCode::IrrationalWeights, what + ": ad has an irrational real eigenvalue (characteristic polynomial " +
                                             eig.charpoly.to_string() + ")");
    case EigenStatus::NonRealEigenvalues:
      fail(ErrorCode::NotSplit, what + ": ad has non-real eigenvalues (characteristic polynomial " +
                                    eig.charpoly.to_string() + ")");
    case EigenStatus::NotDiagonalizable:
      fail(ErrorCode::NotSplit, what + ": ad is not diagonalizable");
  }
}

}  // namespace

SplitTorus validate_torus(const std::vector<Vec>& candidate, const SubalgebraPtr& h) {
  const LieAlgebra& g = h->algebra();
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (candidate[i].size() != g.dim()) fail(ErrorCode::DimensionMismatch, "torus row " + std::to_string(i) + " has wrong length");
    if (!h->span().contains(candidate[i]))
      fail(ErrorCode::NotInSubalgebra, "torus row " + std::to_string(i) + " is not in the subalgebra");
  }
  if (rank(candidate, g.dim()) != candidate.size()) fail(ErrorCode::ValidationError, "torus rows are linearly dependent");
  for (std::size_t i = 0; i < candidate.size(); ++i)
    for (std::size_t j = i + 1; j < candidate.size(); ++j)
      if (!is_zero(g.bracket(candidate[i], candidate[j])))
        fail(ErrorCode::NotAbelian, "torus rows " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  for (std::size_t i = 0; i < candidate.size(); ++i) require_split(g, candidate[i], "torus row " + std::to_string(i));
  return SplitTorus(h, candidate);
}

SplitTorus extend_torus_greedily(const SplitTorus& seed, const SubalgebraPtr& h, const std::vector<Vec>& pool) {
  const LieAlgebra& g = h->algebra();
  std::vector<Vec> current = seed.basis();
  bool grew = true;
  while (grew) {
    grew = false;
    // Zero-weight projection: component of v in the joint kernel of ad(current).
    SpaceAction act;
    act.space = Space::G;
    act.dim = g.dim();
    for (const auto& y : current) act.generators.push_back(g.ad(y));
    auto ws = weight_decomposition(act, current.size());
    std::vector<Vec> pieces;
    std::vector<std::size_t> owner;
    for (std::size_t w = 0; w < ws.weights.size(); ++w)
      for (auto& v : ws.weights[w].space.vectors()) {
        pieces.push_back(std::move(v));
        owner.push_back(w);
      }
    BasisCoordinates split(pieces, g.dim());
    for (const auto& v : pool) {
      if (!h->span().contains(v)) continue;
      auto coords = split.coordinates(v);
      Vec projected(g.dim());
      for (std::size_t i = 0; i < pieces.size(); ++i)
        if (is_zero(ws.weights[owner[i]].form)) axpy(projected, (*coords)[i], pieces[i]);
      if (is_zero(projected)) continue;
      auto trial = current;
      trial.push_back(projected);
      if (rank(trial, g.dim()) != trial.size()) continue;
      try {
        require_split(g, projected, "candidate");
      } catch (const Error&) {
        continue;
      }
      current = std::move(trial);
      grew = true;
      break;
    }
  }
  return validate_torus(current, h);
}

const char* space_label(Space s) {
  switch (s) {
    case Space::H: return "h";
    case Space::GModH: return "g/h";
    case Space::G: return "g";
  }
  return "?";
}

SpaceAction space_action(const SplitTorus& a, Space space, const std::optional<std::vector<Vec>>& complement) {
  const LieAlgebra& g = a.ambient();
  const auto& h = *a.parent();
  SpaceAction act;
  act.space = space;
  switch (space) {
    case Space::G:
      act.dim = g.dim();
      for (const auto& y : a.basis()) act.generators.push_back(g.ad(y));
      break;
    case Space::H:
      act.dim = h.dim();
      for (const auto& y : a.basis()) act.generators.push_back(h.restricted_ad(y));
      break;
    case Space::GModH: {
      act.complement = complement ? *complement : h.span().unit_complement();
      act.dim = act.complement.size();
      if (act.dim + h.dim() != g.dim()) fail(ErrorCode::InvalidArgument, "complement has the wrong dimension");
      std::vector<Vec> full = h.basis();
      full.insert(full.end(), act.complement.begin(), act.complement.end());
      BasisCoordinates coords(full, g.dim());
      for (const auto& y : a.basis()) {
        Matrix m(act.dim, act.dim);
        for (std::size_t j = 0; j < act.dim; ++j) {
          auto c = coords.coordinates(g.bracket(y, act.complement[j]));
          for (std::size_t i = 0; i < act.dim; ++i) m(i, j) = (*c)[h.dim() + i];
        }
        act.generators.push_back(std::move(m));
      }
      break;
    }
  }
  return act;
}

Matrix action_matrix(const SpaceAction& action, const Vec& torus_coords) {
  if (torus_coords.size() != action.generators.size())
    fail(ErrorCode::DimensionMismatch, "action_matrix: coordinate count must equal rank");
  Matrix m(action.dim, action.dim);
  for (std::size_t i = 0; i < torus_coords.size(); ++i)
    if (sgn(torus_coords[i]) != 0) m = m + torus_coords[i] * action.generators[i];
  return m;
}

WeightSystem weight_decomposition(const SpaceAction& action, std::size_t rank) {
  struct Part {
    Vec form;
    Subspace space;
  };
  std::vector<Part> parts{{Vec{}, Subspace::whole(action.dim)}};
  if (action.dim == 0) parts.clear();
  for (std::size_t k = 0; k < action.generators.size(); ++k) {
    auto eig = rational_eigen(action.generators[k]);
    if (eig.status == EigenStatus::IrrationalEigenvalues)
      fail(ErrorCode::IrrationalWeights, std::string("weights on ") + space_label(action.space) + ": torus element " +
                                             std::to_string(k) + " has an irrational eigenvalue (characteristic polynomial " +
                                             eig.charpoly.to_string() + ")");
    if (eig.status != EigenStatus::Ok)
      fail(ErrorCode::NotSplit, std::string("weights on ") + space_label(action.space) + ": torus element " +
                                    std::to_string(k) + " does not act diagonalizably with real eigenvalues");
    std::vector<Part> next;
    for (const auto& part : parts)
      for (std::size_t e = 0; e < eig.eigenvalues.size(); ++e) {
        Subspace piece = subspace_intersect(part.space, eig.eigenspaces[e]);
        if (piece.dim() == 0) continue;
        Vec form = part.form;
        form.push_back(eig.eigenvalues[e]);
        next.push_back({std::move(form), std::move(piece)});
      }
    parts = std::move(next);
  }
  WeightSystem ws;
  ws.space_label = space_label(action.space);
  ws.rank = rank;
  ws.space_dim = action.dim;
  std::size_t total = 0;
  for (auto& p : parts) {
    total += p.space.dim();
    ws.weights.push_back({std::move(p.form), p.space.dim(), std::move(p.space)});
  }
  if (total != action.dim) fail(ErrorCode::Internal, "weight spaces do not fill the space");
  std::sort(ws.weights.begin(), ws.weights.end(), [](const Weight& x, const Weight& y) { return x.form < y.form; });
  return ws;
}

WeightSystem weight_decomposition(const SplitTorus& a, Space space, const std::optional<std::vector<Vec>>& complement) {
  return weight_decomposition(space_action(a, space, complement), a.rank());
}

RhoFunction rho_from_weights(const WeightSystem& ws) {
  RhoFunction f;
  f.rank = ws.rank;
  for (const auto& w : ws.weights)
    if (!is_zero(w.form)) f.forms.push_back({w.form, w.multiplicity});
  return f;
}

Rat rho_eval(const RhoFunction& f, const Vec& y) {
  if (y.size() != f.rank) fail(ErrorCode::DimensionMismatch, "rho_eval: point has wrong length");
  Rat total = 0;
  for (const auto& t : f.forms) total += abs(dot(t.form, y)) * static_cast<unsigned long>(t.multiplicity);
  return total;
}

RhoFunction rho_scaled(const RhoFunction& f, const Rat& q) {
  RhoFunction out = f;
  for (auto& t : out.forms) t.form = scale(q, t.form);
  return out;
}

}  // namespace lietemper
