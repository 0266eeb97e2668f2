// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lietemper/catalog.hpp"
#include "lietemper/error.hpp"
#include "lietemper/pair_file.hpp"
#include "lietemper/polyhedral.hpp"
#include "lietemper/random.hpp"
#include "lietemper/report.hpp"

using namespace lietemper;
using nlohmann::json;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Result()>& body) {
  auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", n, title.c_str(), r.detail.c_str(), s);
  std::fflush(stdout);
}

// ---- numerical oracle ----

Eigen::MatrixXd to_double(const Matrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_d();
  return a;
}

double abs_real_sum(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_double(m), false);
  double total = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) total += std::abs(es.eigenvalues()[i].real());
  return total;
}

// ---- the fixture suite ----

std::vector<std::filesystem::path> fixture_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(LIETEMPER_FIXTURE_DIR))
    if (e.path().extension() == ".pair") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Every fixture checked against all applicable questions with seed 0, 64 samples.
std::map<std::string, std::string> run_suite() {
  std::map<std::string, std::string> reports;
  for (const auto& path : fixture_files()) {
    auto src = file_source(path.string());
    CheckRequest req;
    req.sampling.samples = 64;
    req.sampling.seed = 0;
    reports[path.filename().string()] = run_check(load_source(src), src, req);
  }
  return reports;
}

const json* verdict(const json& doc, const std::string& question) {
  for (const auto& v : doc["verdicts"])
    if (v["question"] == question) return &v;
  return nullptr;
}

std::string outcome_of(const json& doc, const std::string& question) {
  const json* v = verdict(doc, question);
  return v ? (*v)["outcome"].get<std::string>() : "absent";
}

Result expect_outcomes(const std::map<std::string, json>& docs,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& cases,
                         const std::function<std::string(const json&, const std::string&)>& extra = nullptr) {
  std::ostringstream bad;
  std::size_t ok = 0;
  for (const auto& [file, question, want] : cases) {
    auto it = docs.find(file);
    if (it == docs.end()) {
      bad << file << " missing; ";
      continue;
    }
    std::string got = outcome_of(it->second, question);
    std::string more = extra ? extra(it->second, file) : "";
    if (got != want || !more.empty())
      bad << file << " " << question << " = " << got << " (want " << want << ")" << more << "; ";
    else
      ++ok;
  }
  if (!bad.str().empty()) return {false, bad.str()};
  return {true, std::to_string(ok) + "/" + std::to_string(cases.size()) + " fixture verdicts as expected"};
}

RhoFunction random_rho(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> terms(1, 4), mult(1, 3);
  RhoFunction f;
  f.rank = rank;
  const std::size_t count = terms(rng);
  while (f.forms.size() < count) {
    Vec form(rank);
    for (auto& c : form) c = coeff(rng);
    if (!is_zero(form)) f.forms.push_back({form, mult(rng)});
  }
  return f;
}

}  // namespace

int main() {
  std::map<std::string, std::string> first;
  std::map<std::string, json> docs;

  report(1, "rho matches numerical eigenvalues (10 pairs x 20 points, rel tol 1e-9)", [] {
    const std::vector<std::string> pairs = {
        "torus_pair:sl2",        "diagonal_pair:sl2",      "triple_diagonal:sl2", "block_sl:sl3:2",
        "block_sl:sl4:3",        "torus_pair:sl3",         "symmetric_pair_fixed_points:sl4:eta:2",
        "torus_pair:su2_1",      "block_sl:slc3:2",        "triple_diagonal:sl3"};
    auto rng = make_rng(2024, 1);
    double worst = 0;
    std::size_t checks = 0;
    for (const auto& spec : pairs) {
      Pair p = construct(spec);
      const auto fg = rho_from_weights(weight_decomposition(p.torus_h, Space::G));
      const auto fh = rho_from_weights(weight_decomposition(p.torus_h, Space::H));
      const auto fq = rho_from_weights(weight_decomposition(p.torus_h, Space::GModH));
      const auto act_g = space_action(p.torus_h, Space::G);
      const auto act_h = space_action(p.torus_h, Space::H);
      for (int t = 0; t < 20; ++t) {
        Vec y(p.torus_h.rank());
        for (auto& c : y) c = random_rat(rng, 20);
        const double ng = abs_real_sum(action_matrix(act_g, y)), nh = abs_real_sum(action_matrix(act_h, y));
        // g/h from the g and h spectra: independent of the complement basis
        const std::pair<double, Rat> trio[] = {{ng, rho_eval(fg, y)}, {nh, rho_eval(fh, y)}, {ng - nh, rho_eval(fq, y)}};
        for (const auto& [numeric, exact] : trio) {
          const double e = exact.get_d();
          const double rel = std::abs(numeric - e) / std::max(1.0, std::abs(e));
          worst = std::max(worst, rel);
          ++checks;
        }
      }
    }
    std::ostringstream os;
    os << checks << " comparisons, worst relative error " << worst;
    return Result{worst <= 1e-9, os.str()};
  });

  report(2, "dominance agrees with integer sweep (200, rank<=2) and 1e4-sample oracle (200, rank<=3)", [] {
    auto rng = make_rng(7, 2);
    std::size_t disagree = 0, holds = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t rank = 1 + t % 2;
      auto f = random_rho(rng, rank), g = random_rho(rng, rank);
      auto d = decide_dominance(f, g);
      bool sweep = true;
      if (rank == 1) {
        for (long x = -25; x <= 25 && sweep; ++x) sweep = rho_eval(f, {Rat(x)}) <= rho_eval(g, {Rat(x)});
      } else {
        for (long x = -25; x <= 25 && sweep; ++x)
          for (long y = -25; y <= 25 && sweep; ++y) sweep = rho_eval(f, {Rat(x), Rat(y)}) <= rho_eval(g, {Rat(x), Rat(y)});
      }
      if (sweep != d.holds) ++disagree;
      holds += d.holds;
    }
    std::size_t oracle_disagree = 0, oracle_holds = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t rank = 1 + t % 3;
      auto f = random_rho(rng, rank), g = random_rho(rng, rank);
      auto d = decide_dominance(f, g);
      auto o = randomized_dominance_oracle(f, g, 10'000, 1000 + t);
      if (o.agree != d.holds) ++oracle_disagree;
      oracle_holds += d.holds;
    }
    std::ostringstream os;
    os << "sweep: " << disagree << " disagreements (" << holds << " hold), oracle: " << oracle_disagree
       << " disagreements (" << oracle_holds << " hold)";
    return Result{disagree == 0 && oracle_disagree == 0, os.str()};
  });

  first = run_suite();
  for (const auto& [file, text] : first) docs[file] = json::parse(text);

  report(3, "temperedness fixtures", [&] {
    return expect_outcomes(
        docs,
        {{"sl2_so2.pair", "tempered", "yes_certified"},
         {"sl3_so3.pair", "tempered", "yes_certified"},
         {"so3_group.pair", "tempered", "yes_certified"},
         {"whittaker_sl3.pair", "tempered", "yes_certified"},
         {"sl2_diagonal.pair", "tempered", "yes_certified"},
         {"sl2_torus.pair", "tempered", "yes_certified"}},
        [](const json& doc, const std::string& file) -> std::string {
          const json& c = (*verdict(doc, "tempered"))["certificate"];
          auto r = verify_report(doc.dump());
          if (!r.ok) return " certificate does not re-verify";
          if (file == "sl2_diagonal.pair" && c["margin"] != "0") return " margin " + c["margin"].dump() + " != 0";
          if ((file == "sl2_so2.pair" || file == "sl3_so3.pair" || file == "whittaker_sl3.pair") &&
              !c["rank_zero_shortcut"].get<bool>())
            return " expected the rank-0 shortcut";
          return "";
        });
  });

  report(4, "sphericity fixtures", [&] {
    return expect_outcomes(docs,
                           {{"sl2_so2.pair", "real_spherical", "yes_certified"},
                            {"sl3_so3.pair", "real_spherical", "yes_certified"},
                            {"triple_sl2.pair", "real_spherical", "yes_certified"},
                            {"triple_sl3.pair", "real_spherical", "probable_no"},
                            {"whittaker_sl3.pair", "real_spherical", "yes_certified"}},
                           [](const json& doc, const std::string& file) -> std::string {
                             if (file == "triple_sl3.pair" && (*verdict(doc, "real_spherical"))["samples_used"] != 64)
                               return " samples_used != 64";
                             return "";
                           });
  });

  report(5, "complex pairs: tempered yes <=> sampled generic stabilizer abelian", [&] {
    std::ostringstream bad;
    std::size_t checked = 0;
    for (const auto& [file, doc] : docs) {
      if (!doc["pair"]["complex_pair"].get<bool>()) continue;
      const json* t = verdict(doc, "tempered");
      const json* s = verdict(doc, "generic_stabilizer_abelian");
      if (!t || !s) {
        bad << file << " lacks a verdict; ";
        continue;
      }
      const bool tempered = (*t)["outcome"] == "yes_certified";
      const bool decided = tempered || (*t)["outcome"] == "no_certified";
      const bool abelian = (*s)["certificate"]["abelian"].get<bool>();
      if (!decided || tempered != abelian) bad << file << " tempered=" << (*t)["outcome"] << " abelian=" << abelian << "; ";
      ++checked;
    }
    const bool torus = docs.count("slc2_torus.pair") && docs.at("slc2_torus.pair")["pair"]["complex_pair"].get<bool>();
    if (!torus) bad << "slc2_torus.pair is not a complex pair; ";
    if (!bad.str().empty()) return Result{false, bad.str()};
    return Result{checked >= 4, std::to_string(checked) + " complex fixtures consistent"};
  });

  report(6, "every certified verdict re-verifies from its serialized certificate", [&] {
    std::size_t certified = 0, verified = 0;
    std::ostringstream bad;
    for (const auto& [file, doc] : docs) {
      auto r = verify_report(first.at(file));
      for (std::size_t i = 0; i < doc["verdicts"].size(); ++i) {
        const std::string o = doc["verdicts"][i]["outcome"];
        if (o != "yes_certified" && o != "no_certified") continue;
        ++certified;
        if (r.lines[i].find(": ok") != std::string::npos)
          ++verified;
        else
          bad << file << ": " << r.lines[i] << "; ";
      }
    }
    std::string detail = std::to_string(verified) + "/" + std::to_string(certified) + " certificates verified";
    if (!bad.str().empty()) detail += "; " + bad.str();
    return Result{certified > 0 && verified == certified, detail};
  });

  report(7, "two seeded runs of the fixture suite are byte-identical", [&] {
    auto second = run_suite();
    std::size_t same = 0;
    std::string diff;
    for (const auto& [file, text] : first) {
      if (second.count(file) && second.at(file) == text)
        ++same;
      else
        diff += file + " ";
    }
    return Result{diff.empty() && same == first.size(),
                    std::to_string(same) + "/" + std::to_string(first.size()) + " reports identical" +
                        (diff.empty() ? "" : "; differ: " + diff)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
