#include <filesystem>

#include "doctest.h"
#include "lietemper/catalog.hpp"
#include "lietemper/error.hpp"
#include "lietemper/geometry.hpp"
#include "lietemper/pair_file.hpp"

using namespace lietemper;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Vec at(const LieAlgebra& g, const char* label) { return unit_vec(g.dim(), *g.index_of(label)); }

SamplingOptions seeded(std::uint64_t seed) {
  SamplingOptions o;
  o.seed = seed;
  return o;
}

bool has_note(const Verdict& v, const std::string& needle) {
  for (const auto& n : v.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (auto q : {Question::Tempered, Question::RealSpherical, Question::ComplexSpherical, Question::GenericStabilizerAbelian})
    CHECK(parse_question(question_name(q)) == q);
  CHECK(parse_question("real-spherical") == Question::RealSpherical);
  CHECK(parse_question("generic_stabilizer") == Question::GenericStabilizerAbelian);
  CHECK_FALSE(parse_question("spherical"));
  for (auto o : {Outcome::YesCertified, Outcome::NoCertified, Outcome::ProbableNo, Outcome::Unknown})
    CHECK(parse_outcome(outcome_name(o)) == o);
}

TEST_CASE("minimal parabolics") {
  CHECK(minimal_parabolic(construct("sl_n_R:2"), std::nullopt).space.dim() == 2);
  auto sl3 = construct("sl_n_R:3");
  auto par = minimal_parabolic(sl3, v({1, 1}));
  CHECK(par.space.dim() == 5);
  CHECK(par.levi.dim() == 2);
  CHECK(par.positive_root_vectors.size() == 3);
  CHECK(par.negative_root_vectors.size() == 3);
  // compact: no roots, p = g
  auto so3 = construct("so_p_q:3:0");
  CHECK(minimal_parabolic(so3, std::nullopt).space.dim() == 3);
  // so(2,1) has real rank one, so m is the centralizer of a and p has dim 2
  CHECK(minimal_parabolic(construct("so_p_q:2:1"), std::nullopt).space.dim() == 2);
  // su(2,1): dim 8, restricted roots +-a (mult 2), +-2a (mult 1); m + a has dim 2
  CHECK(minimal_parabolic(construct("su_p_q:2:1"), std::nullopt).space.dim() == 5);

  // E12 has weight (2, -1); xi = (1, 2) annihilates it
  try {
    minimal_parabolic(sl3, v({1, 2}));
    FAIL("degenerate functional accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFunctional);
  }
  // generic choice is seeded
  CHECK(minimal_parabolic(sl3, std::nullopt, 5).xi == minimal_parabolic(sl3, std::nullopt, 5).xi);
}

TEST_CASE("exact word action") {
  auto p = construct("sl_n_R:2");
  const auto& g = *p.g;
  Vec e = at(g, "E12"), f = at(g, "E21"), h = at(g, "H1");
  CHECK(apply_word(g, {}, {f}) == std::vector<Vec>{f});
  // exp(ad E) F = F + H - E
  CHECK(apply_word(g, {e}, {f})[0] == add(sub(f, e), h));
  // inverse letter undoes it
  CHECK(apply_word(g, {e, scale(-1, e)}, {f})[0] == f);
}

TEST_CASE("real sphericity examples") {
  for (const char* spec : {"triple_diagonal:sl2", "symmetric_pair_fixed_points:sl2:transpose",
                           "symmetric_pair_fixed_points:sl3:transpose", "whittaker_nilradical:sl3", "diagonal_pair:sl2",
                           "torus_pair:sl2", "block_sl:sl3:2"}) {
    auto p = construct(spec);
    for (std::uint64_t seed : {1u, 2u}) {
      auto r = check_real_spherical(p, seeded(seed));
      CHECK_MESSAGE(r.outcome == Outcome::YesCertified, spec);
      CHECK(verify_certificate(p, r).ok);
    }
  }
  auto group = check_real_spherical(construct("sl_n_R:2"));
  CHECK(group.outcome == Outcome::ProbableNo);
  CHECK(has_note(group, "h = 0"));
  CHECK(has_note(group, "dimension count"));
  // compact: p = g
  CHECK(check_real_spherical(construct("so_p_q:3:0")).outcome == Outcome::YesCertified);
}

TEST_CASE("triple sl3 has no open orbit") {
  SamplingOptions o;
  o.samples = 16;
  auto r = check_real_spherical(construct("triple_diagonal:sl3"), o);
  CHECK(r.outcome == Outcome::ProbableNo);
  CHECK(r.samples_used == 16);
  CHECK(has_note(r, "dimension count"));
}

TEST_CASE("complex sphericity") {
  auto w = construct("whittaker_nilradical:sl3");
  auto r = check_complex_spherical(w);
  CHECK(r.outcome == Outcome::YesCertified);
  CHECK(std::get<WordCertificate>(r.certificate).complexified);
  CHECK(verify_certificate(w, r).ok);
  CHECK(check_complex_spherical(construct("so_p_q:3:0")).outcome == Outcome::ProbableNo);

  auto c = complexify(construct("block_sl:sl3:2"));
  CHECK(c.g->dim() == 16);
  CHECK(c.h->dim() == 6);
  CHECK(c.torus_g.rank() == 2);
  CHECK(validate(*c.g).ok);
  CHECK(is_complex_pair(c));
  CHECK_FALSE(is_complex_pair(construct("block_sl:sl3:2")));
  CHECK(is_complex_pair(construct("torus_pair:slc2")));
}

TEST_CASE("temperedness examples") {
  auto t = check_tempered(construct("torus_pair:sl2"));
  CHECK(t.outcome == Outcome::YesCertified);
  CHECK(*std::get<DominanceCertificate>(t.certificate).margin == 4);
  CHECK(has_note(t, "maximal split abelian"));

  auto d = check_tempered(construct("diagonal_pair:sl2"));
  CHECK(d.outcome == Outcome::YesCertified);
  CHECK(*std::get<DominanceCertificate>(d.certificate).margin == 0);

  auto s = check_tempered(construct("symmetric_pair_fixed_points:sl3:transpose"));
  CHECK(s.outcome == Outcome::YesCertified);
  CHECK(std::get<DominanceCertificate>(s.certificate).rank_zero_shortcut);

  auto n = check_tempered(construct("block_sl:sl4:3"));
  CHECK(n.outcome == Outcome::NoCertified);
  const auto& cert = std::get<DominanceCertificate>(n.certificate);
  REQUIRE(cert.witness);
  CHECK(rho_eval(cert.rho_h, *cert.witness) > rho_eval(cert.rho_g_mod_h, *cert.witness));
  CHECK(verify_certificate(construct("block_sl:sl4:3"), n).ok);

  CHECK(check_tempered(construct("block_sl:sl3:2")).outcome == Outcome::YesCertified);
  CHECK(check_tempered(construct("triple_diagonal:sl3")).outcome == Outcome::YesCertified);

  SamplingOptions tight;
  tight.cone_budget = 2;
  CHECK_THROWS_AS(check_tempered(construct("block_sl:sl4:3"), tight), Error);
}

TEST_CASE("tampered certificates are rejected") {
  auto p = construct("torus_pair:sl2");
  auto t = check_tempered(p);
  auto& cert = std::get<DominanceCertificate>(t.certificate);
  cert.margin = Rat(5);
  CHECK_FALSE(verify_certificate(p, t).ok);

  auto r = check_real_spherical(construct("triple_diagonal:sl2"));
  auto& w = std::get<WordCertificate>(r.certificate);
  w.letters.clear();
  CHECK_FALSE(verify_certificate(construct("triple_diagonal:sl2"), r).ok);

  auto sp = construct("torus_pair:slc2");
  auto s = check_generic_stabilizer(sp);
  std::get<StabilizerCertificate>(s.certificate).dimension += 1;
  CHECK_FALSE(verify_certificate(sp, s).ok);
}

TEST_CASE("generic stabilizers") {
  auto a = generic_stabilizer(construct("torus_pair:slc2"));
  CHECK(a.dimension == 0);
  CHECK(check_generic_stabilizer(construct("torus_pair:slc2")).outcome == Outcome::YesCertified);

  auto d = construct("diagonal_pair:slc2");
  auto dv = check_generic_stabilizer(d);
  CHECK(std::get<StabilizerCertificate>(dv.certificate).dimension == 2);
  CHECK(std::get<StabilizerCertificate>(dv.certificate).abelian);
  CHECK(dv.outcome == Outcome::Unknown);
  CHECK(verify_certificate(d, dv).ok);

  CHECK(generic_stabilizer(construct("block_sl:slc3:2")).dimension == 0);
  CHECK(generic_stabilizer(construct("diagonal_pair:sl2")).dimension == 1);

  auto n = check_generic_stabilizer(construct("block_sl:sl4:3"));
  CHECK_FALSE(std::get<StabilizerCertificate>(n.certificate).abelian);
  CHECK(std::get<StabilizerCertificate>(n.certificate).dimension == 3);
}

TEST_CASE("interpretation") {
  Verdict t;
  t.question = Question::Tempered;
  t.outcome = Outcome::YesCertified;
  Verdict s;
  s.question = Question::GenericStabilizerAbelian;
  s.outcome = Outcome::ProbableNo;
  s.certificate = StabilizerCertificate{{}, 3, {}, false};

  // only complex pairs are cross-checked
  CHECK_NOTHROW(interpret({t, s}, false));
  try {
    interpret({t, s}, true);
    FAIL("inconsistency not detected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentVerdicts);
  }
  std::get<StabilizerCertificate>(s.certificate).abelian = true;
  auto c = interpret({t, s}, true);
  REQUIRE(c.size() == 2);
  CHECK(c[0].statement == "L^2(G/H) is tempered");
  CHECK(c[1].citation.find("abelian-stabilizer") != std::string::npos);

  Verdict r;
  r.question = Question::RealSpherical;
  r.outcome = Outcome::Unknown;
  CHECK(interpret({r}, false).empty());
}

TEST_CASE("group case for a compact group") {
  auto lone = check_complex_spherical(construct("so_p_q:3:0"));
  CHECK(lone.outcome == Outcome::ProbableNo);
  CHECK(has_note(lone, "h = 0"));
  auto diag = check_complex_spherical(construct("diagonal_pair:so3_0"));
  CHECK(diag.outcome == Outcome::YesCertified);
  CHECK(verify_certificate(construct("diagonal_pair:so3_0"), diag).ok);
}

TEST_CASE("bundled fixture expectations") {
  namespace fs = std::filesystem;
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(LIETEMPER_FIXTURE_DIR)) {
    if (entry.path().extension() != ".pair") continue;
    Pair p = load_pair_file(entry.path().string());
    for (const auto& e : p.expectations) {
      CAPTURE(entry.path().filename().string());
      CAPTURE(question_name(e.question));
      Verdict v;
      switch (e.question) {
        case Question::Tempered: v = check_tempered(p); break;
        case Question::RealSpherical: v = check_real_spherical(p); break;
        case Question::ComplexSpherical: v = check_complex_spherical(p); break;
        case Question::GenericStabilizerAbelian: v = check_generic_stabilizer(p); break;
      }
      CHECK(v.outcome == e.outcome);
      ++checked;
    }
  }
  CHECK(checked >= 25);
}
