#include "doctest.h"
#include "json.hpp"
#include "lietemper/catalog.hpp"
#include "lietemper/error.hpp"
#include "lietemper/pair_file.hpp"
#include "lietemper/report.hpp"

using namespace lietemper;
using nlohmann::json;

namespace {

std::string check(const std::string& spec, const std::string& questions = "", std::uint64_t seed = 0) {
  auto src = family_source(spec);
  CheckRequest req;
  req.questions = parse_question_list(questions);
  req.sampling.seed = seed;
  return run_check(load_source(src), src, req);
}

}  // namespace

TEST_CASE("question lists") {
  CHECK(parse_question_list("").empty());
  CHECK(parse_question_list("all").empty());  // default set
  auto q = parse_question_list("tempered, real-spherical,tempered");
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Question::Tempered);
  CHECK(q[1] == Question::RealSpherical);
  CHECK_THROWS_AS(parse_question_list("tempered,nonsense"), Error);
}

TEST_CASE("machine report layout") {
  auto doc = json::parse(check("torus_pair:sl2"));
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["tool"]["version"] == kToolVersion);
  CHECK(doc["pair"]["name"] == "torus_pair:sl2");
  CHECK(doc["pair"]["source"]["kind"] == "family");
  CHECK(doc["pair"]["dim_g"] == 3);
  CHECK(doc["pair"]["complex_pair"] == false);
  REQUIRE(doc["verdicts"].size() == 4);
  CHECK(doc["verdicts"][0]["question"] == "tempered");
  CHECK(doc["verdicts"][0]["certificate"]["margin"] == "4");
  for (const auto& v : doc["verdicts"]) CHECK(v["outcome"] == "yes_certified");
  CHECK(doc.dump(2) + "\n" == check("torus_pair:sl2"));  // sorted keys, stable layout
  CHECK(doc.find("timing") == doc.end());
}

TEST_CASE("complex_spherical is skipped without complexification data") {
  const std::string text = serialize_pair(construct("block_sl:sl3:2"));
  std::string stripped;
  for (std::size_t a = 0; a < text.size();) {
    auto b = text.find('\n', a);
    std::string line = text.substr(a, b - a);
    if (line != "complexification" && line.rfind("compact_cartan", 0) != 0) stripped += line + "\n";
    a = b + 1;
  }
  auto src = text_source(stripped);
  auto doc = json::parse(run_check(load_source(src), src, {}));
  CHECK(doc["verdicts"].size() == 3);
  CHECK(doc["notes"][0].get<std::string>().find("complex_spherical skipped") == 0);
  CHECK(doc["pair"]["source"]["kind"] == "file");

  CheckRequest only;
  only.questions = {Question::ComplexSpherical};
  try {
    run_check(load_source(src), src, only);
    FAIL("missing data not reported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingComplexData);
  }
}

TEST_CASE("reports re-verify, tampering is caught") {
  for (const char* spec : {"torus_pair:sl2", "block_sl:sl4:3", "whittaker_nilradical:sl3", "diagonal_pair:slc2"}) {
    const std::string report = check(spec, "", 3);
    auto ok = verify_report(report);
    CHECK_MESSAGE(ok.ok, spec);
    CHECK(ok.lines.size() == json::parse(report)["verdicts"].size());
  }
  auto doc = json::parse(check("block_sl:sl4:3", "tempered"));
  doc["verdicts"][0]["certificate"]["witness"] = json::array({"0", "0"});
  auto bad = verify_report(doc.dump());
  CHECK_FALSE(bad.ok);
  CHECK(bad.lines[0].find("FAILED") != std::string::npos);

  doc = json::parse(check("triple_diagonal:sl2", "real-spherical"));
  doc["verdicts"][0]["certificate"]["letters"] = json::array();
  CHECK_FALSE(verify_report(doc.dump()).ok);

  CHECK_THROWS_AS(verify_report("{\"schema\": \"other\"}"), Error);
  CHECK_THROWS_AS(verify_report("not json"), Error);
}

TEST_CASE("human rendering") {
  const std::string human = render_human(check("block_sl:sl4:3", "tempered"));
  CHECK(human.find("pair block_sl:sl4:3") == 0);
  CHECK(human.find("no_certified") != std::string::npos);
  CHECK(human.find("witness Y = (") != std::string::npos);
  CHECK(human.find("not tempered") != std::string::npos);
}

TEST_CASE("rho reports") {
  Pair p = construct("block_sl:sl3:2");
  const std::string text = rho_report(p, Space::GModH, {parse_point("1"), parse_point("-1/2")}, false);
  CHECK(text.find("rho(1) = 4") != std::string::npos);
  CHECK(text.find("rho(-1/2) = 2") != std::string::npos);
  auto doc = json::parse(rho_report(p, Space::H, {parse_point("3")}, true));
  CHECK(doc["schema"] == "lietemper.rho/1");
  CHECK(doc["values"][0]["value"] == "12");
  CHECK(parse_space("g_mod_h") == Space::GModH);
  CHECK_THROWS_AS(parse_space("k"), Error);
  CHECK_THROWS_AS(parse_point("1,x"), Error);
  CHECK_THROWS_AS(rho_report(p, Space::H, {parse_point("1,2")}, false), Error);
}

TEST_CASE("catalog text") {
  const std::string list = catalog_listing(LIETEMPER_FIXTURE_DIR);
  for (const auto& f : family_table()) CHECK(list.find(f.id) != std::string::npos);
  CHECK(list.find("triple_sl3.pair") != std::string::npos);
  CHECK(catalog_show("block_sl").find("example  block_sl:sl3:2") != std::string::npos);
  CHECK_THROWS_AS(catalog_show("nope"), Error);
}
