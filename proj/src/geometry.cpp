#include "lietemper/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lietemper/error.hpp"
#include "lietemper/modp.hpp"
#include "lietemper/random.hpp"

namespace lietemper {

const char* question_name(Question q) {
  switch (q) {
    case Question::Tempered: return "tempered";
    case Question::RealSpherical: return "real_spherical";
    case Question::ComplexSpherical: return "complex_spherical";
    case Question::GenericStabilizerAbelian: return "generic_stabilizer_abelian";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::YesCertified: return "yes_certified";
    case Outcome::NoCertified: return "no_certified";
    case Outcome::ProbableNo: return "probable_no";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

std::optional<Question> parse_question(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '-', '_');
  for (auto q : {Question::Tempered, Question::RealSpherical, Question::ComplexSpherical, Question::GenericStabilizerAbelian})
    if (t == question_name(q)) return q;
  if (t == "generic_stabilizer") return Question::GenericStabilizerAbelian;
  return std::nullopt;
}

std::optional<Outcome> parse_outcome(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '-', '_');
  for (auto o : {Outcome::YesCertified, Outcome::NoCertified, Outcome::ProbableNo, Outcome::Unknown})
    if (t == outcome_name(o)) return o;
  return std::nullopt;
}

Pair make_pair(std::string name, std::string provenance, LieAlgebraPtr g, std::vector<Vec> h_rows,
               std::vector<Vec> torus_h_rows, std::vector<Vec> torus_g_rows,
               std::optional<ComplexificationData> complexification) {
  auto report = validate(*g);
  if (!report.ok) fail(ErrorCode::ValidationError, "algebra " + g->name() + ": " + report.kind + " violation: " + report.message);
  auto h = std::make_shared<const SubalgebraEmbedding>(g, std::move(h_rows));
  std::vector<Vec> units;
  for (std::size_t i = 0; i < g->dim(); ++i) units.push_back(unit_vec(g->dim(), i));
  auto whole = std::make_shared<const SubalgebraEmbedding>(g, std::move(units));
  SplitTorus th = validate_torus(torus_h_rows, h);
  SplitTorus tg = validate_torus(torus_g_rows, whole);
  if (complexification) {
    for (const auto& t : complexification->compact_cartan) {
      if (t.size() != g->dim()) fail(ErrorCode::ValidationError, "compact Cartan row has wrong length");
      for (const auto& a : tg.basis())
        if (!is_zero(g->bracket(a, t))) fail(ErrorCode::ValidationError, "compact Cartan row does not commute with torus_g");
    }
  }
  return Pair{std::move(name), std::move(provenance), std::move(g), std::move(h), std::move(whole), std::move(th),
              std::move(tg), std::move(complexification), {}, {}};
}

bool is_complex_pair(const Pair& p) {
  const auto& J = p.g->complex_structure();
  if (!J) return false;
  for (const auto& row : p.h->basis())
    if (!p.h->span().contains(J->apply(row))) return false;
  return true;
}

LieAlgebra complexify_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim(), m = 2 * n;
  std::vector<std::string> labels = g.labels();
  for (std::size_t k = 0; k < n; ++k) {
    std::string l = "I_" + g.labels()[k];
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
    labels.push_back(l);
  }
  std::vector<Rat> c(m * m * m);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& { return c[(i * m + j) * m + k]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& t : g.bracket_terms(a, b)) {
        at(a, b, t.index) = t.coeff;
        at(a, n + b, n + t.index) = t.coeff;
        at(n + a, b, n + t.index) = t.coeff;
        at(n + a, n + b, t.index) = -t.coeff;
      }
  LieAlgebra out(g.name() + "_C", std::move(labels), std::move(c));
  // multiplication by i: e_k -> i e_k -> -e_k
  Matrix J(m, m);
  for (std::size_t k = 0; k < n; ++k) {
    J(n + k, k) = 1;
    J(k, n + k) = -1;
  }
  out.set_complex_structure(std::move(J));
  if (const auto& real = g.realization()) {
    std::vector<Matrix> mats;
    const std::size_t s = (*real)[0].rows();
    auto block = [s](const Matrix& a, bool imaginary) {
      Matrix r(2 * s, 2 * s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
          if (imaginary) {
            r(i, s + j) = -a(i, j);
            r(s + i, j) = a(i, j);
          } else {
            r(i, j) = a(i, j);
            r(s + i, s + j) = a(i, j);
          }
        }
      return r;
    };
    for (const auto& a : *real) mats.push_back(block(a, false));
    for (const auto& a : *real) mats.push_back(block(a, true));
    out.set_realization(std::move(mats));
  }
  return out;
}

Pair complexify(const Pair& p) {
  if (!p.complexification)
    fail(ErrorCode::MissingComplexData, "pair " + p.name + " has no complexification data (compact Cartan part)");
  const std::size_t n = p.g->dim();
  auto embed = [n](const Vec& v, bool imaginary) {
    Vec out(2 * n);
    for (std::size_t i = 0; i < n; ++i) out[(imaginary ? n : 0) + i] = v[i];
    return out;
  };
  auto gc = std::make_shared<const LieAlgebra>(complexify_algebra(*p.g));
  std::vector<Vec> h_rows, th, tg;
  for (const auto& r : p.h->basis()) h_rows.push_back(embed(r, false));
  for (const auto& r : p.h->basis()) h_rows.push_back(embed(r, true));
  for (const auto& r : p.torus_h.basis()) th.push_back(embed(r, false));
  for (const auto& r : p.torus_g.basis()) tg.push_back(embed(r, false));
  for (const auto& r : p.complexification->compact_cartan) tg.push_back(embed(r, true));
  Pair out = make_pair(p.name + "_C", p.provenance, gc, std::move(h_rows), std::move(th), std::move(tg));
  out.notes = p.notes;
  return out;
}

namespace {

// Weights of g under torus_g with their weight spaces (cached per call site).
WeightSystem root_decomposition(const SplitTorus& torus_g) { return weight_decomposition(torus_g, Space::G); }

ParabolicSubalgebra parabolic_from(const WeightSystem& ws, const Vec& xi) {
  ParabolicSubalgebra par;
  par.xi = xi;
  const std::size_t n = ws.space_dim;
  std::vector<Vec> pvecs, levi;
  for (const auto& w : ws.weights) {
    const int s = sgn(dot(w.form, xi));
    auto vecs = w.space.vectors();
    if (s == 0 && !is_zero(w.form))
      fail(ErrorCode::DegenerateFunctional, "chamber functional annihilates a nonzero weight");
    for (auto& v : vecs) {
      if (s >= 0) pvecs.push_back(v);
      if (s == 0) levi.push_back(v);
      if (s > 0) par.positive_root_vectors.push_back(v);
      if (s < 0) par.negative_root_vectors.push_back(v);
    }
  }
  par.space = Subspace::span(pvecs, n);
  par.levi = Subspace::span(levi, n);
  return par;
}

}  // namespace

ParabolicSubalgebra minimal_parabolic(const SplitTorus& torus_g, const std::optional<Vec>& xi, std::uint64_t seed) {
  const LieAlgebra& g = torus_g.ambient();
  auto ws = root_decomposition(torus_g);
  Vec chosen;
  if (xi) {
    if (xi->size() != torus_g.rank()) fail(ErrorCode::DimensionMismatch, "chamber functional has wrong length");
    chosen = *xi;
  } else {
    auto rng = make_rng(seed, 0x51);
    for (long attempt = 0;; ++attempt) {
      const long bound = 3 + attempt;
      std::uniform_int_distribution<long> dist(-bound, bound);
      Vec cand(torus_g.rank());
      for (auto& c : cand) c = dist(rng);
      bool generic = true;
      for (const auto& w : ws.weights)
        if (!is_zero(w.form) && sgn(dot(w.form, cand)) == 0) generic = false;
      if (generic) {
        chosen = std::move(cand);
        break;
      }
    }
  }
  auto par = parabolic_from(ws, chosen);
  if (auto bad = closure_violation(g, par.space.vectors()))
    fail(ErrorCode::Internal, "minimal parabolic is not bracket-closed");
  return par;
}

ParabolicSubalgebra minimal_parabolic(const Pair& p, const std::optional<Vec>& xi, std::uint64_t seed) {
  return minimal_parabolic(p.torus_g, xi, seed);
}

std::vector<Vec> apply_word(const LieAlgebra& g, const std::vector<Vec>& letters, const std::vector<Vec>& vectors) {
  std::vector<Vec> out = vectors;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Matrix ad = g.ad(*it);
    for (auto& v : out) {
      Vec term = v, sum = v;
      for (long k = 1; k <= static_cast<long>(g.dim()); ++k) {
        term = scale(Rat(1, k), ad.apply(term));
        if (is_zero(term)) break;
        sum = add(sum, term);
      }
      v = std::move(sum);
    }
  }
  return out;
}

namespace {

std::vector<modp::ModVec> apply_word_mod(const LieAlgebra& g, const std::vector<Vec>& letters,
                                         const std::vector<Vec>& vectors) {
  std::vector<modp::ModVec> out;
  for (const auto& v : vectors) out.push_back(modp::from_vec(v));
  const std::size_t n = g.dim();
  std::vector<modp::Elem> inverse(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) inverse[k] = modp::inv(k);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto ad = modp::from_matrix(g.ad(*it));
    for (auto& v : out) {
      modp::ModVec term = v, sum = v;
      for (std::size_t k = 1; k <= n; ++k) {
        term = ad.apply(term);
        bool zero = true;
        for (auto& x : term) {
          x = modp::mul(x, inverse[k]);
          zero = zero && x == 0;
        }
        if (zero) break;
        for (std::size_t i = 0; i < n; ++i) sum[i] = modp::add(sum[i], term[i]);
      }
      v = std::move(sum);
    }
  }
  return out;
}

// Letters alternate between the nilradical and its opposite and end with the
// opposite one, so w P is a generic point of G/P.
std::vector<Vec> random_word(const ParabolicSubalgebra& par, std::mt19937_64& rng, const SamplingOptions& opt,
                             std::size_t n) {
  std::vector<Vec> letters;
  if (par.negative_root_vectors.empty()) return letters;
  std::uniform_int_distribution<std::size_t> len_dist(2, std::max<std::size_t>(2, opt.max_word_length));
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) {
    const bool opposite = (len - 1 - i) % 2 == 0;
    const auto& pool = opposite ? par.negative_root_vectors : par.positive_root_vectors;
    Vec z(n);
    for (const auto& r : pool) axpy(z, random_rat(rng, opt.coefficient_bound), r);
    if (!is_zero(z)) letters.push_back(std::move(z));
  }
  return letters;
}

bool spans_everything(const LieAlgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> rows = a;
  rows.insert(rows.end(), b.begin(), b.end());
  return rank(rows, g.dim()) == g.dim();
}

constexpr std::uint64_t kRealStream = 0x1000;
constexpr std::uint64_t kComplexStream = 0x2000;
constexpr std::uint64_t kStabilizerStream = 0x3000;

Verdict certify_open_orbit(const Pair& p, const SamplingOptions& opt, Question question, bool complexified,
                           std::uint64_t stream) {
  Verdict v;
  v.question = question;
  v.seed = opt.seed;
  const LieAlgebra& g = *p.g;
  auto par = minimal_parabolic(p.torus_g, std::nullopt, opt.seed);
  const auto pvecs = par.space.vectors();
  const auto& hvecs = p.h->basis();
  if (par.space.dim() + p.h->dim() < g.dim()) {
    std::ostringstream os;
    os << "dimension count: dim p + dim h = " << par.space.dim() + p.h->dim() << " < dim g = " << g.dim();
    v.notes.push_back(os.str());
  }
  if (par.negative_root_vectors.empty()) {
    if (spans_everything(g, pvecs, hvecs)) {
      v.outcome = Outcome::YesCertified;
      v.certificate = WordCertificate{par.xi, {}, complexified};
    } else {
      v.outcome = Outcome::Unknown;
      v.notes.push_back("no nilpotent root vectors and p + h != g at the base point");
    }
    return v;
  }
  std::vector<modp::ModVec> hmod;
  for (const auto& r : hvecs) hmod.push_back(modp::from_vec(r));
  for (std::size_t s = 0; s < opt.samples; ++s) {
    auto rng = make_rng(opt.seed, stream + s);
    auto letters = random_word(par, rng, opt, g.dim());
    v.samples_used = s + 1;
    auto rows = apply_word_mod(g, letters, pvecs);
    rows.insert(rows.end(), hmod.begin(), hmod.end());
    if (modp::rank(rows) != g.dim()) continue;
    // Full rank mod p implies full rank over Q; confirm exactly before emitting.
    if (!spans_everything(g, apply_word(g, letters, pvecs), hvecs)) fail(ErrorCode::Internal, "modular witness failed over Q");
    v.outcome = Outcome::YesCertified;
    v.certificate = WordCertificate{par.xi, std::move(letters), complexified};
    return v;
  }
  v.outcome = Outcome::ProbableNo;
  return v;
}

}  // namespace

Verdict check_real_spherical(const Pair& p, const SamplingOptions& opt) {
  auto v = certify_open_orbit(p, opt, Question::RealSpherical, false, kRealStream);
  if (p.h->dim() == 0)
    v.notes.push_back("warning: h = 0; the group case is better posed as diagonal_pair (open orbit of P on G itself)");
  return v;
}

Verdict check_complex_spherical(const Pair& p, const SamplingOptions& opt) {
  Pair pc = complexify(p);
  auto v = certify_open_orbit(pc, opt, Question::ComplexSpherical, true, kComplexStream);
  if (p.h->dim() == 0)
    v.notes.push_back("warning: h = 0; the group case is better posed as diagonal_pair (Borel orbit on G_C itself)");
  return v;
}

Verdict check_tempered(const Pair& p, const SamplingOptions& opt) {
  Verdict v;
  v.question = Question::Tempered;
  v.seed = opt.seed;
  v.notes.push_back("torus_h is asserted to be a maximal split abelian subalgebra of h");
  DominanceCertificate cert;
  if (p.torus_h.rank() == 0) {
    cert.rank_zero_shortcut = true;
    v.outcome = Outcome::YesCertified;
    v.notes.push_back("rank-0 split torus in h: rho_h vanishes identically");
    v.certificate = std::move(cert);
    return v;
  }
  cert.rho_h = rho_from_weights(weight_decomposition(p.torus_h, Space::H));
  cert.rho_g_mod_h = rho_from_weights(weight_decomposition(p.torus_h, Space::GModH));
  auto d = decide_dominance(cert.rho_h, cert.rho_g_mod_h, opt.cone_budget);
  cert.rays = d.rays;
  cert.margin = d.margin;
  cert.witness = d.witness;
  cert.cone_count = d.cone_count;
  v.outcome = d.holds ? Outcome::YesCertified : Outcome::NoCertified;
  v.certificate = std::move(cert);
  return v;
}

GenericStabilizer generic_stabilizer(const Pair& p, const SamplingOptions& opt) {
  GenericStabilizer out;
  const LieAlgebra& g = *p.g;
  const auto& hvecs = p.h->basis();
  out.representative = Subspace(g.dim());
  if (hvecs.empty()) return out;
  auto par = minimal_parabolic(p.torus_g, std::nullopt, opt.seed);
  std::vector<Vec> best;
  if (!par.negative_root_vectors.empty()) {
    std::vector<modp::ModVec> hmod;
    for (const auto& r : hvecs) hmod.push_back(modp::from_vec(r));
    std::size_t best_dim = hvecs.size() + 1;
    for (std::size_t s = 0; s < opt.samples; ++s) {
      auto rng = make_rng(opt.seed, kStabilizerStream + s);
      auto letters = random_word(par, rng, opt, g.dim());
      out.samples_used = s + 1;
      auto rows = apply_word_mod(g, letters, hvecs);
      rows.insert(rows.end(), hmod.begin(), hmod.end());
      const std::size_t d = 2 * hvecs.size() - modp::rank(rows);
      if (d < best_dim) {
        best_dim = d;
        best = std::move(letters);
      }
      if (d == 0) break;
    }
  }
  Subspace moved = Subspace::span(apply_word(g, best, hvecs), g.dim());
  out.representative = subspace_intersect(p.h->span(), moved);
  out.dimension = out.representative.dim();
  out.letters = std::move(best);
  const auto basis = out.representative.vectors();
  for (std::size_t i = 0; i < basis.size() && out.abelian; ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!is_zero(g.bracket(basis[i], basis[j]))) {
        out.abelian = false;
        break;
      }
  return out;
}

Verdict check_generic_stabilizer(const Pair& p, const SamplingOptions& opt) {
  Verdict v;
  v.question = Question::GenericStabilizerAbelian;
  v.seed = opt.seed;
  auto gs = generic_stabilizer(p, opt);
  v.samples_used = gs.samples_used;
  const long lower = std::max<long>(0, 2 * static_cast<long>(p.h->dim()) - static_cast<long>(p.g->dim()));
  if (gs.abelian) {
    // dim <= 1 is an open condition and every such algebra is abelian.
    v.outcome = gs.dimension <= 1 ? Outcome::YesCertified : Outcome::Unknown;
    if (gs.dimension > 1) v.notes.push_back("sampled stabilizer is abelian (Monte Carlo evidence for the generic stabilizer)");
  } else {
    // At the minimal possible dimension the point is generic and non-abelian is open.
    v.outcome = static_cast<long>(gs.dimension) == lower ? Outcome::NoCertified : Outcome::ProbableNo;
    if (v.outcome == Outcome::ProbableNo)
      v.notes.push_back("sampled stabilizer is non-abelian (Monte Carlo evidence for the generic stabilizer)");
  }
  v.notes.push_back("stabilizers computed at the Lie algebra level: h cap Ad(w) h");
  v.certificate = StabilizerCertificate{gs.letters, gs.dimension, gs.representative.vectors(), gs.abelian};
  return v;
}

namespace {

std::string vec_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

std::vector<Conclusion> interpret(const std::vector<Verdict>& verdicts, bool complex_pair) {
  std::vector<Conclusion> out;
  const Verdict* tempered = nullptr;
  const Verdict* stabilizer = nullptr;
  for (const auto& v : verdicts) {
    switch (v.question) {
      case Question::RealSpherical:
        if (v.outcome == Outcome::YesCertified)
          out.push_back({"G/H is real spherical, so dim Hom_G(Pi, C^infinity(G/H)) < infinity for every irreducible Pi",
                         "finite-multiplicity criterion (real spherical <=> all multiplicities finite)"});
        else if (v.outcome == Outcome::ProbableNo)
          out.push_back({"no open minimal-parabolic orbit found; finiteness of multiplicities not established "
                         "(Monte Carlo evidence that some multiplicity is infinite)",
                         "finite-multiplicity criterion (real spherical <=> all multiplicities finite)"});
        break;
      case Question::ComplexSpherical:
        if (v.outcome == Outcome::YesCertified)
          out.push_back({"X_C is spherical, so multiplicities are uniformly bounded: sup_Pi dim Hom_G(Pi, C^infinity(G/H)) < infinity",
                         "uniform-boundedness criterion (X_C spherical <=> bounded multiplicities)"});
        else if (v.outcome == Outcome::ProbableNo)
          out.push_back({"no open Borel orbit found on X_C; uniform boundedness not established "
                         "(Monte Carlo evidence of unbounded multiplicities)",
                         "uniform-boundedness criterion (X_C spherical <=> bounded multiplicities)"});
        break;
      case Question::Tempered:
        tempered = &v;
        if (v.outcome == Outcome::YesCertified) {
          out.push_back({"L^2(G/H) is tempered", "temperedness criterion (L^2(G/H) tempered <=> rho_h <= rho_{g/h})"});
        } else if (v.outcome == Outcome::NoCertified) {
          const auto* cert = std::get_if<DominanceCertificate>(&v.certificate);
          std::string at = cert && cert->witness ? " at Y = " + vec_string(*cert->witness) : "";
          out.push_back({"L^2(G/H) is not tempered: rho_h > rho_{g/h}" + at,
                         "temperedness criterion (L^2(G/H) tempered <=> rho_h <= rho_{g/h})"});
        }
        break;
      case Question::GenericStabilizerAbelian:
        stabilizer = &v;
        break;
    }
  }
  if (complex_pair && tempered && stabilizer &&
      (tempered->outcome == Outcome::YesCertified || tempered->outcome == Outcome::NoCertified)) {
    const auto* cert = std::get_if<StabilizerCertificate>(&stabilizer->certificate);
    const bool abelian = cert && cert->abelian;
    const bool is_tempered = tempered->outcome == Outcome::YesCertified;
    if (abelian != is_tempered)
      fail(ErrorCode::InconsistentVerdicts, std::string("complex pair: tempered = ") + (is_tempered ? "yes" : "no") +
                                                " but sampled generic stabilizer is " + (abelian ? "abelian" : "non-abelian"));
    out.push_back({std::string("generic stabilizer is ") + (abelian ? "abelian" : "non-abelian") +
                       ", consistent with the temperedness verdict",
                   "abelian-stabilizer corollary (complex pairs: L^2(G/H) tempered <=> (G/H)_Ab dense)"});
  }
  return out;
}

namespace {

// Independent ray set: every (s-1)-subset of forms cutting out a line in the support.
std::vector<Vec> brute_force_rays(const Arrangement& arr) {
  std::vector<Vec> rays;
  const std::size_t s = arr.support.dim(), k = arr.forms.size();
  if (s == 0) return rays;
  const std::size_t choose = s - 1;
  std::vector<std::size_t> idx(choose);
  for (std::size_t i = 0; i < choose; ++i) idx[i] = i;
  std::set<Vec> seen;
  std::size_t visited = 0;
  while (true) {
    if (++visited > 5'000'000) fail(ErrorCode::ConeBudgetExceeded, "ray re-verification too large");
    std::vector<Vec> eqs;
    for (auto i : idx) eqs.push_back(arr.forms[i]);
    for (const auto& l : arr.lineality.vectors()) eqs.push_back(l);  // support is lineality-perp
    auto ker = kernel(Matrix::from_rows(eqs, arr.rank));
    if (ker.size() == 1) {
      Vec d = normalize_ray(ker[0]);
      if (seen.insert(d).second) rays.push_back(d);
      Vec e = scale(Rat(-1), d);
      if (seen.insert(e).second) rays.push_back(e);
    }
    // next combination
    std::size_t pos = choose;
    while (pos > 0 && idx[pos - 1] == k - choose + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < choose; ++i) idx[i] = idx[i - 1] + 1;
  }
  std::sort(rays.begin(), rays.end(), ray_less);
  return rays;
}

Recheck verify_dominance(const Pair& p, const DominanceCertificate& cert, Outcome outcome) {
  if (cert.rank_zero_shortcut) {
    if (p.torus_h.rank() != 0) return {false, "rank-0 shortcut claimed but torus_h has positive rank"};
    return {outcome == Outcome::YesCertified, "rank-0 torus_h"};
  }
  auto rho_h = rho_from_weights(weight_decomposition(p.torus_h, Space::H));
  auto rho_gh = rho_from_weights(weight_decomposition(p.torus_h, Space::GModH));
  if (rho_h != cert.rho_h || rho_gh != cert.rho_g_mod_h) return {false, "stored rho functions differ from recomputed ones"};
  if (outcome == Outcome::NoCertified) {
    if (!cert.witness) return {false, "no witness stored"};
    const bool strict = rho_eval(rho_h, *cert.witness) > rho_eval(rho_gh, *cert.witness);
    return {strict, strict ? "witness violates rho_h <= rho_{g/h}" : "witness does not violate"};
  }
  Arrangement arr = build_arrangement(rho_h, rho_gh);
  std::vector<Vec> support_rays = brute_force_rays(arr);
  Rat margin = 0;
  bool first = true;
  for (const auto& r : cert.rays) {
    if (!arr.support.contains(r)) return {false, "stored ray outside the support of the arrangement"};
    Rat d = rho_eval(rho_gh, r) - rho_eval(rho_h, r);
    if (sgn(d) < 0) return {false, "stored ray violates dominance"};
    if (first || d < margin) margin = d;
    first = false;
  }
  for (const auto& r : support_rays) {
    Rat d = rho_eval(rho_gh, r) - rho_eval(rho_h, r);
    if (sgn(d) < 0) return {false, "independently enumerated ray violates dominance"};
  }
  if (cert.margin && *cert.margin != margin) return {false, "stored margin differs from recomputed margin"};
  return {true, "all " + std::to_string(support_rays.size()) + " arrangement rays satisfy rho_h <= rho_{g/h}"};
}

}  // namespace

Recheck verify_certificate(const Pair& p, const Verdict& v) {
  try {
    if (const auto* w = std::get_if<WordCertificate>(&v.certificate)) {
      if (v.outcome != Outcome::YesCertified) return {false, "word certificate on a non-yes verdict"};
      Pair target = w->complexified ? complexify(p) : p;
      auto par = minimal_parabolic(target.torus_g, w->xi);
      const LieAlgebra& g = *target.g;
      auto moved = apply_word(g, w->letters, par.space.vectors());
      if (!spans_everything(g, moved, target.h->basis())) return {false, "Ad(w) p + h != g"};
      return {true, "Ad(w) p + h = g (rank " + std::to_string(g.dim()) + ")"};
    }
    if (const auto* d = std::get_if<DominanceCertificate>(&v.certificate)) return verify_dominance(p, *d, v.outcome);
    if (const auto* s = std::get_if<StabilizerCertificate>(&v.certificate)) {
      const LieAlgebra& g = *p.g;
      Subspace moved = Subspace::span(apply_word(g, s->letters, p.h->basis()), g.dim());
      Subspace inter = subspace_intersect(p.h->span(), moved);
      if (inter.dim() != s->dimension) return {false, "stabilizer dimension differs"};
      if (inter != Subspace::span(s->basis, g.dim())) return {false, "stabilizer basis differs"};
      bool abelian = true;
      auto b = inter.vectors();
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
          if (!is_zero(g.bracket(b[i], b[j]))) abelian = false;
      if (abelian != s->abelian) return {false, "abelian flag differs"};
      return {true, "h cap Ad(w) h has dimension " + std::to_string(inter.dim())};
    }
    return {v.outcome != Outcome::YesCertified && v.outcome != Outcome::NoCertified, "no certificate"};
  } catch (const Error& e) {
    return {false, std::string("re-verification raised ") + error_code_name(e.code()) + ": " + e.what()};
  }
}

}  // namespace lietemper
