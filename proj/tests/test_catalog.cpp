#include <filesystem>

#include "doctest.h"
#include "lietemper/catalog.hpp"
#include "lietemper/error.hpp"
#include "lietemper/pair_file.hpp"

using namespace lietemper;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kSl2Head =
    "lie-pair-file 1\n"
    "name t\n"
    "labels H E F\n"
    "const H E E 2\n"
    "const H F F -2\n"
    "const E F H 1\n"
    "torus_g : H=1\n";

}  // namespace

TEST_CASE("catalog algebras validate") {
  struct Case {
    std::string token;
    std::size_t dim, real_rank;
  };
  std::vector<Case> cases;
  for (std::size_t n = 2; n <= 4; ++n) cases.push_back({"sl" + std::to_string(n), n * n - 1, n - 1});
  for (std::size_t p = 0; p <= 6; ++p)
    for (std::size_t q = 0; p + q <= 6; ++q)
      if (p + q >= 3) cases.push_back({"so" + std::to_string(p) + "_" + std::to_string(q), (p + q) * (p + q - 1) / 2, std::min(p, q)});
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; p + q <= 3; ++q)
      if (p + q >= 2) cases.push_back({"su" + std::to_string(p) + "_" + std::to_string(q), (p + q) * (p + q) - 1, std::min(p, q)});
  for (std::size_t n = 1; n <= 2; ++n) cases.push_back({"sp" + std::to_string(n), n * (2 * n + 1), n});
  cases.push_back({"slc2", 6, 1});
  cases.push_back({"slc3", 16, 2});
  cases.push_back({"soc3", 6, 1});
  cases.push_back({"soc4", 12, 2});
  cases.push_back({"spc1", 6, 1});
  cases.push_back({"sl2+so3", 6, 1});

  for (const auto& c : cases) {
    auto b = build_algebra(c.token);
    CAPTURE(c.token);
    CHECK(b.algebra->dim() == c.dim);
    CHECK(b.split_torus.size() == c.real_rank);
    CHECK(validate(*b.algebra).ok);
    CHECK(determinant(killing_form(*b.algebra)) != 0);
    // the designated Cartan is abelian
    std::vector<Vec> cartan = b.split_torus;
    cartan.insert(cartan.end(), b.compact_cartan.begin(), b.compact_cartan.end());
    for (const auto& x : cartan)
      for (const auto& y : cartan) CHECK(is_zero(b.algebra->bracket(x, y)));
  }
}

TEST_CASE("unsupported tokens and specs") {
  for (const char* bad : {"sl1", "sl7", "so9_0", "su5_4", "sp5", "slc5", "sl2+sl2+sl2+sl2", "gl3", "", "sl"})
    CHECK_MESSAGE(code_of([&] { build_algebra(bad); }) == ErrorCode::UnsupportedParams, bad);
  for (const char* bad : {"no_such:1", "sl_n_R", "sl_n_R:x", "sl_n_R:9", "block_sl:sl3:3", "block_sl:sl3", "so_p_q:2",
                          "symmetric_pair_fixed_points:sl3:flip", "complex_simple_realified:su:2"})
    CHECK_MESSAGE(code_of([&] { construct(bad); }) == ErrorCode::UnsupportedParams, bad);
  CHECK(message_of([] { construct("block_sl:sl3"); }).find("block_sl expects") != std::string::npos);
}

TEST_CASE("family examples construct and round-trip") {
  for (const auto& f : family_table()) {
    CAPTURE(f.id);
    Pair p = construct(f.example);
    CHECK(p.name == f.example);
    CHECK(find_family(f.id) == &f);
    const std::string text = serialize_pair(p);
    Pair q = parse_pair_file(text);
    CHECK(same_pair(p, q));
    CHECK(serialize_pair(q) == text);
  }
}

TEST_CASE("family shapes") {
  auto t = construct("triple_diagonal:sl2");
  CHECK(t.g->dim() == 9);
  CHECK(t.h->dim() == 3);
  CHECK(t.torus_h.rank() == 1);
  CHECK(t.torus_g.rank() == 3);

  auto w = construct("whittaker_nilradical:sl3");
  CHECK(w.h->dim() == 3);
  CHECK(w.torus_h.rank() == 0);

  auto s = construct("symmetric_pair_fixed_points:sl4:eta:2");
  CHECK(s.h->dim() == 7);  // s(gl2 + gl2)
  CHECK(s.torus_h.rank() == 3);

  auto so = construct("symmetric_pair_fixed_points:sl3:transpose");
  CHECK(so.h->dim() == 3);
  CHECK(so.torus_h.rank() == 0);

  auto b = construct("block_sl:slc4:3");
  CHECK(b.g->dim() == 30);
  CHECK(b.h->dim() == 16);
  CHECK(is_complex_pair(b));

  auto g = construct("sl_n_R:3");
  CHECK(g.h->dim() == 0);
  CHECK(g.complexification);
}

TEST_CASE("pair file errors carry line numbers") {
  const std::string head = kSl2Head;
  CHECK(parse_pair_file(head + "sub : H=1\ntorus_h : H=1\n").h->dim() == 1);

  auto msg = message_of([&] { parse_pair_file(head + "sub : E=1\nsub : F=1\n", "x.pair"); });
  CHECK(msg.find("x.pair:9:") == 0);
  CHECK(msg.find("not bracket-closed") != std::string::npos);

  CHECK(code_of([&] { parse_pair_file("lie-pair-file 2\n"); }) == ErrorCode::ParseError);
  CHECK(message_of([&] { parse_pair_file("# only\n", "e"); }) == "e:1: empty file (missing header)");
  CHECK(message_of([&] { parse_pair_file(head + "bogus 1\n", "f"); }).find("f:8: unknown directive") == 0);
  CHECK(message_of([&] { parse_pair_file(head + "sub : Q=1\n", "f"); }).find("unknown basis label 'Q'") !=
        std::string::npos);
  CHECK(message_of([&] { parse_pair_file(head + "sub : 1 2\n", "f"); }).find("dense vector needs 3") != std::string::npos);
  CHECK(message_of([&] { parse_pair_file(head + "sub : H=1/0\n", "f"); }).find("malformed fraction") != std::string::npos);
  CHECK(message_of([&] { parse_pair_file(head + "expect tempered maybe x\n", "f"); }).find("unknown outcome") !=
        std::string::npos);

  // [E, F] = H + E breaks Jacobi; the earliest constant line touching the triple is 4
  std::string broken = "lie-pair-file 1\nname b\nlabels H E F\nconst H E E 2\nconst H F F -2\nconst E F H 1\nconst E F E 1\n";
  msg = message_of([&] { parse_pair_file(broken, "b"); });
  CHECK(msg.find("b:4: jacobi") == 0);
  CHECK(code_of([&] { parse_pair_file(broken); }) == ErrorCode::ValidationError);

  // explicit reverse constant that is not antisymmetric
  msg = message_of([&] { parse_pair_file(head + "const E H E 2\n", "a"); });
  CHECK(msg.find("antisymmetry") != std::string::npos);

  // non-split torus
  CHECK(code_of([&] {
          parse_pair_file("lie-pair-file 1\nname r\nlabels A B C\nconst A B C 1\nconst B C A 1\nconst C A B 1\ntorus_g : A=1\n");
        }) == ErrorCode::NotSplit);
}

TEST_CASE("bundled fixtures parse and match their families") {
  namespace fs = std::filesystem;
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(LIETEMPER_FIXTURE_DIR)) {
    if (entry.path().extension() != ".pair") continue;
    CAPTURE(entry.path().string());
    Pair p = load_pair_file(entry.path().string());
    CHECK_FALSE(p.expectations.empty());
    Pair fresh = construct(p.name);
    fresh.expectations = p.expectations;
    CHECK(same_pair(p, fresh));
    ++count;
  }
  CHECK(count == 15);
}
