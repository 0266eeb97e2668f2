#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lietemper/linalg.hpp"
#include "lietemper/weights.hpp"

namespace lietemper {

inline constexpr std::size_t kDefaultConeBudget = 1'000'000;

/// Central hyperplane arrangement {lambda_j = 0} on Q^rank.
struct Arrangement {
  std::size_t rank = 0;
  std::vector<Vec> forms;  // normalized: first nonzero coordinate is 1; pairwise non-proportional
  Subspace lineality;      // common kernel of the forms
  Subspace support;        // span of the forms (a complement of the lineality)
};

/// Scales v so that its first nonzero coordinate is +1 (forms) ...
Vec normalize_form(const Vec& v);
/// ... or +-1 keeping the direction (rays).
Vec normalize_ray(const Vec& v);
/// Canonical ray order: by line representative, then the +1 direction first.
bool ray_less(const Vec& a, const Vec& b);

Arrangement make_arrangement(std::size_t rank, const std::vector<Vec>& forms);
Arrangement build_arrangement(const RhoFunction& f, const RhoFunction& g);

struct SignedCone {
  std::vector<int> signs;       // +1 / -1 per stored form (closed cells are full-dimensional)
  std::vector<Vec> generators;  // extreme rays modulo lineality, canonical order
  std::size_t dimension = 0;    // dimension in the quotient by lineality
};

/// All rays of the arrangement restricted to the support: the 1-dimensional
/// intersections of hyperplanes, both directions, in canonical order.
std::vector<Vec> arrangement_rays(const Arrangement& a, std::size_t budget = kDefaultConeBudget);

/// Closed full-dimensional cones of the arrangement. Throws ConeBudgetExceeded.
std::vector<SignedCone> enumerate_cones(const Arrangement& a, std::size_t budget = kDefaultConeBudget);

struct DominanceVerdict {
  bool holds = false;
  std::optional<Vec> witness;  // f(witness) > g(witness) when !holds
  std::optional<Rat> margin;   // min over rays of g - f when holds
  std::size_t cone_count = 0;
  std::vector<Vec> rays;       // every checked ray, canonical order
};

/// Decides f(Y) <= g(Y) for all Y.
DominanceVerdict decide_dominance(const RhoFunction& f, const RhoFunction& g, std::size_t budget = kDefaultConeBudget);

struct OracleResult {
  bool agree = true;
  std::optional<Vec> counterexample;
  std::size_t samples_used = 0;
};

/// Evaluates both functions exactly at random rational points; any strict
/// violation is a certified counterexample to f <= g.
OracleResult randomized_dominance_oracle(const RhoFunction& f, const RhoFunction& g, std::size_t samples,
                                         std::uint64_t seed);

}  // namespace lietemper
