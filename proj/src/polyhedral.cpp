#include "lietemper/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "lietemper/error.hpp"
#include "lietemper/random.hpp"

namespace lietemper {

Vec normalize_form(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return scale(1 / x, v);
  return v;
}

Vec normalize_ray(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return scale(1 / abs(x), v);
  return v;
}

bool ray_less(const Vec& a, const Vec& b) {
  Vec la = normalize_form(a), lb = normalize_form(b);
  if (la != lb) return la < lb;
  // same line: the direction agreeing with the representative comes first
  return a == la && b != lb;
}

Arrangement make_arrangement(std::size_t rank, const std::vector<Vec>& forms) {
  Arrangement a;
  a.rank = rank;
  std::set<Vec> seen;
  for (const auto& f : forms) {
    if (f.size() != rank) fail(ErrorCode::DimensionMismatch, "arrangement form has wrong length");
    if (is_zero(f)) continue;
    Vec n = normalize_form(f);
    if (seen.insert(n).second) a.forms.push_back(std::move(n));
  }
  std::sort(a.forms.begin(), a.forms.end());
  a.support = Subspace::span(a.forms, rank);
  a.lineality = Subspace::span(kernel(Matrix::from_rows(a.forms, rank)), rank);
  return a;
}

Arrangement build_arrangement(const RhoFunction& f, const RhoFunction& g) {
  if (f.rank != g.rank) fail(ErrorCode::DimensionMismatch, "build_arrangement: rank mismatch");
  std::vector<Vec> forms;
  for (const auto& t : f.forms) forms.push_back(t.form);
  for (const auto& t : g.forms) forms.push_back(t.form);
  return make_arrangement(f.rank, forms);
}

namespace {

std::string key_of(const Subspace& s) {
  std::string k;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.ambient(); ++c) k += s.basis()(r, c).get_str() + ",";
    k += ";";
  }
  return k;
}

// F intersected with ker(form), computed inside F's basis.
Subspace cut(const Subspace& flat, const Vec& form) {
  auto basis = flat.vectors();
  Matrix values(1, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) values(0, i) = dot(form, basis[i]);
  std::vector<Vec> out;
  for (const auto& k : kernel(values)) {
    Vec v(flat.ambient());
    for (std::size_t i = 0; i < basis.size(); ++i) axpy(v, k[i], basis[i]);
    out.push_back(std::move(v));
  }
  return Subspace::span(out, flat.ambient());
}

bool vanishes_on(const Subspace& flat, const Vec& form) {
  for (std::size_t r = 0; r < flat.dim(); ++r)
    if (sgn(dot(form, flat.basis().row(r))) != 0) return false;
  return true;
}

}  // namespace

std::vector<Vec> arrangement_rays(const Arrangement& a, std::size_t budget) {
  std::vector<Vec> rays;
  if (a.support.dim() == 0) return rays;
  std::set<std::string> seen{key_of(a.support)};
  std::deque<Subspace> queue{a.support};
  std::vector<Subspace> lines;
  while (!queue.empty()) {
    Subspace flat = std::move(queue.front());
    queue.pop_front();
    if (flat.dim() == 1) {
      lines.push_back(std::move(flat));
      continue;
    }
    for (const auto& form : a.forms) {
      if (vanishes_on(flat, form)) continue;
      Subspace next = cut(flat, form);
      if (seen.insert(key_of(next)).second) {
        if (seen.size() > budget)
          fail(ErrorCode::ConeBudgetExceeded, "arrangement flat count exceeds budget " + std::to_string(budget));
        queue.push_back(std::move(next));
      }
    }
  }
  for (const auto& line : lines) {
    Vec d = normalize_ray(line.basis().row(0));
    rays.push_back(scale(Rat(-1), d));
    rays.push_back(std::move(d));
  }
  std::sort(rays.begin(), rays.end(), ray_less);
  return rays;
}

std::vector<SignedCone> enumerate_cones(const Arrangement& a, std::size_t budget) {
  std::vector<SignedCone> cones;
  const std::size_t k = a.forms.size();
  if (k == 0) {
    cones.push_back({{}, {}, 0});
    return cones;
  }
  const auto rays = arrangement_rays(a, budget);
  // values[r][j] = lambda_j(ray_r)
  std::vector<std::vector<int>> signs(rays.size(), std::vector<int>(k));
  std::vector<std::vector<Rat>> values(rays.size(), std::vector<Rat>(k));
  for (std::size_t r = 0; r < rays.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) {
      values[r][j] = dot(a.forms[j], rays[r]);
      signs[r][j] = sgn(values[r][j]);
    }
  // A partial sign vector is realized iff the sum of all compatible rays
  // satisfies it strictly.
  auto realized = [&](const std::vector<int>& sigma) {
    const std::size_t t = sigma.size();
    std::vector<Rat> total(t);
    for (std::size_t r = 0; r < rays.size(); ++r) {
      bool ok = true;
      for (std::size_t j = 0; j < t && ok; ++j) ok = signs[r][j] * sigma[j] >= 0;
      if (!ok) continue;
      for (std::size_t j = 0; j < t; ++j) total[j] += values[r][j];
    }
    for (std::size_t j = 0; j < t; ++j)
      if (sgn(total[j]) != sigma[j]) return false;
    return true;
  };
  std::vector<std::vector<int>> level{{}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& sigma : level)
      for (int s : {1, -1}) {
        auto ext = sigma;
        ext.push_back(s);
        if (realized(ext)) next.push_back(std::move(ext));
      }
    if (next.size() > budget)
      fail(ErrorCode::ConeBudgetExceeded, "cone count exceeds budget " + std::to_string(budget));
    level = std::move(next);
  }
  for (auto& sigma : level) {
    SignedCone cone;
    cone.dimension = a.support.dim();
    for (std::size_t r = 0; r < rays.size(); ++r) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = signs[r][j] * sigma[j] >= 0;
      if (ok) cone.generators.push_back(rays[r]);
    }
    cone.signs = std::move(sigma);
    cones.push_back(std::move(cone));
  }
  return cones;
}

DominanceVerdict decide_dominance(const RhoFunction& f, const RhoFunction& g, std::size_t budget) {
  if (f.rank != g.rank) fail(ErrorCode::DimensionMismatch, "decide_dominance: rank mismatch");
  Arrangement arr = build_arrangement(f, g);
  auto cones = enumerate_cones(arr, budget);
  DominanceVerdict v;
  v.cone_count = cones.size();
  std::set<Vec> seen;
  for (const auto& c : cones)
    for (const auto& r : c.generators)
      if (seen.insert(r).second) v.rays.push_back(r);
  std::sort(v.rays.begin(), v.rays.end(), ray_less);
  v.holds = true;
  Rat margin = 0;
  bool first = true;
  for (const auto& r : v.rays) {
    Rat diff = rho_eval(g, r) - rho_eval(f, r);
    if (sgn(diff) < 0) {
      v.holds = false;
      v.witness = r;
      break;
    }
    if (first || diff < margin) margin = diff;
    first = false;
  }
  if (v.holds) v.margin = margin;
  return v;
}

OracleResult randomized_dominance_oracle(const RhoFunction& f, const RhoFunction& g, std::size_t samples,
                                         std::uint64_t seed) {
  if (f.rank != g.rank) fail(ErrorCode::DimensionMismatch, "randomized_dominance_oracle: rank mismatch");
  OracleResult out;
  auto rng = make_rng(seed, 0x0a);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec y(f.rank);
    for (auto& c : y) c = random_rat(rng, 100);
    ++out.samples_used;
    if (rho_eval(f, y) > rho_eval(g, y)) {
      out.agree = false;
      out.counterexample = std::move(y);
      break;
    }
  }
  return out;
}

}  // namespace lietemper
