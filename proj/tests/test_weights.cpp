#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lietemper/catalog.hpp"
#include "lietemper/error.hpp"
#include "lietemper/random.hpp"
#include "lietemper/weights.hpp"

using namespace lietemper;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

SubalgebraPtr whole(const LieAlgebraPtr& g) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < g->dim(); ++i) rows.push_back(unit_vec(g->dim(), i));
  return std::make_shared<const SubalgebraEmbedding>(g, rows);
}

Vec at(const LieAlgebra& g, const char* label) { return unit_vec(g.dim(), *g.index_of(label)); }

// multiset of (form, multiplicity) as strings, for order-free comparison
std::vector<std::string> signature(const RhoFunction& f) {
  std::vector<std::string> out;
  for (const auto& t : f.forms) {
    std::string s;
    for (const auto& c : t.form) s += to_string(c) + ",";
    out.push_back(s + "x" + std::to_string(t.multiplicity));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double numeric_rho(const Matrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_d();
  if (a.rows() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  double total = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) total += std::abs(es.eigenvalues()[i].real());
  return total;
}

}  // namespace

TEST_CASE("exact eigen-decomposition") {
  auto ok = rational_eigen(Matrix::from_rows({v({2, 0}), v({1, -1})}, 2));
  CHECK(ok.status == EigenStatus::Ok);
  CHECK(ok.eigenvalues == std::vector<Rat>{Rat(-1), Rat(2)});
  CHECK(rational_eigen(Matrix::from_rows({v({0, 2}), v({1, 0})}, 2)).status == EigenStatus::IrrationalEigenvalues);
  CHECK(rational_eigen(Matrix::from_rows({v({0, -1}), v({1, 0})}, 2)).status == EigenStatus::NonRealEigenvalues);
  CHECK(rational_eigen(Matrix::from_rows({v({0, 1}), v({0, 0})}, 2)).status == EigenStatus::NotDiagonalizable);
}

TEST_CASE("sl2 torus weights") {
  auto g = build_algebra("sl2").algebra;
  auto h = whole(g);
  auto a = validate_torus({at(*g, "H1")}, h);
  auto ws = weight_decomposition(a, Space::G);
  REQUIRE(ws.weights.size() == 3);
  CHECK(ws.weights[0].form == v({-2}));
  CHECK(ws.weights[1].form == v({0}));
  CHECK(ws.weights[2].form == v({2}));
  for (const auto& w : ws.weights) CHECK(w.multiplicity == 1);
  auto rho = rho_from_weights(ws);
  CHECK(rho.forms.size() == 2);
  CHECK(rho_eval(rho, v({1})) == 4);
  CHECK(rho_eval(rho, v({-3})) == 12);
  CHECK(rho_eval(rho, v({0})) == 0);
}

TEST_CASE("torus validation errors") {
  auto so3 = build_algebra("so3_0").algebra;
  auto h = whole(so3);
  try {
    validate_torus({at(*so3, "R12")}, h);
    FAIL("rotation accepted as split");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSplit);
    CHECK(std::string(e.what()).find("torus row 0") != std::string::npos);
  }

  auto sl3 = build_algebra("sl3").algebra;
  auto hs = whole(sl3);
  CHECK_THROWS_AS(validate_torus({at(*sl3, "E12")}, hs), Error);  // nilpotent
  try {
    validate_torus({at(*sl3, "H1"), at(*sl3, "E13")}, hs);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAbelian);
  }
  auto b = std::make_shared<const SubalgebraEmbedding>(sl3, std::vector<Vec>{at(*sl3, "H1")});
  try {
    validate_torus({at(*sl3, "H2")}, b);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInSubalgebra);
  }
}

TEST_CASE("greedy extension reaches the real rank") {
  struct Case {
    const char* token;
    std::size_t rank;
  };
  for (auto c : {Case{"sl3", 2}, Case{"sl4", 3}, Case{"so2_1", 1}, Case{"so3_0", 0}, Case{"su2_1", 1}, Case{"sp2", 2}}) {
    auto g = build_algebra(c.token).algebra;
    auto h = whole(g);
    std::vector<Vec> pool;
    for (std::size_t i = 0; i < g->dim(); ++i) pool.push_back(unit_vec(g->dim(), i));
    auto a = extend_torus_greedily(validate_torus({}, h), h, pool);
    CHECK_MESSAGE(a.rank() == c.rank, c.token);
  }
}

TEST_CASE("sl3 over sl2 weights and complement independence") {
  Pair p = construct("block_sl:sl3:2");
  REQUIRE(p.torus_h.rank() == 1);
  auto ws = weight_decomposition(p.torus_h, Space::GModH);
  CHECK(ws.space_dim == 5);
  auto rho = rho_from_weights(ws);
  CHECK(rho_eval(rho, v({1})) == 4);
  auto rho_h = rho_from_weights(weight_decomposition(p.torus_h, Space::H));
  CHECK(rho_eval(rho_h, v({1})) == 4);

  // shift each complement vector by an element of h
  auto comp = p.h->span().unit_complement();
  const auto& hb = p.h->basis();
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = add(comp[i], scale(Rat(int(i) + 1), hb[i % hb.size()]));
  auto shifted = rho_from_weights(weight_decomposition(p.torus_h, Space::GModH, comp));
  CHECK(signature(shifted) == signature(rho));
}

TEST_CASE("rho on g splits as rho on h plus rho on g/h") {
  auto rng = make_rng(3, 1);
  for (const char* spec : {"block_sl:sl3:2", "block_sl:sl4:3", "triple_diagonal:sl2", "symmetric_pair_fixed_points:sl3:transpose",
                           "torus_pair:sl3", "block_sl:slc3:2"}) {
    Pair p = construct(spec);
    auto fg = rho_from_weights(weight_decomposition(p.torus_h, Space::G));
    auto fh = rho_from_weights(weight_decomposition(p.torus_h, Space::H));
    auto fq = rho_from_weights(weight_decomposition(p.torus_h, Space::GModH));
    for (int t = 0; t < 25; ++t) {
      Vec y(p.torus_h.rank());
      for (auto& c : y) c = random_rat(rng, 7);
      CHECK_MESSAGE(rho_eval(fg, y) == rho_eval(fh, y) + rho_eval(fq, y), spec);
    }
  }
}

TEST_CASE("rho is even, positively homogeneous and subadditive") {
  Pair p = construct("block_sl:sl4:3");
  auto f = rho_from_weights(weight_decomposition(p.torus_h, Space::GModH));
  auto rng = make_rng(5, 2);
  for (int t = 0; t < 50; ++t) {
    Vec x(f.rank), y(f.rank);
    for (auto& c : x) c = random_rat(rng, 9);
    for (auto& c : y) c = random_rat(rng, 9);
    Rat s = abs(random_rat(rng, 9));
    CHECK(rho_eval(f, x) == rho_eval(f, scale(-1, x)));
    CHECK(rho_eval(f, scale(s, x)) == s * rho_eval(f, x));
    CHECK(rho_eval(f, add(x, y)) <= rho_eval(f, x) + rho_eval(f, y));
    CHECK(rho_eval(rho_scaled(f, 2), x) == 2 * rho_eval(f, x));
  }
}

TEST_CASE("exact rho agrees with numerical eigenvalues") {
  auto rng = make_rng(11, 4);
  for (const char* spec : {"block_sl:sl4:3", "triple_diagonal:sl3", "torus_pair:su2_1", "symmetric_pair_fixed_points:sl4:eta:1"}) {
    Pair p = construct(spec);
    for (Space s : {Space::H, Space::GModH, Space::G}) {
      auto act = space_action(p.torus_h, s);
      auto f = rho_from_weights(weight_decomposition(act, p.torus_h.rank()));
      for (int t = 0; t < 10; ++t) {
        Vec y(p.torus_h.rank());
        for (auto& c : y) c = random_rat(rng, 9);
        const double exact = rho_eval(f, y).get_d();
        CHECK_MESSAGE(std::abs(numeric_rho(action_matrix(act, y)) - exact) <= 1e-8 * std::max(1.0, exact), spec);
      }
    }
  }
}
