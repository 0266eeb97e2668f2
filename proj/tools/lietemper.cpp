// Command-line driver. Links only the C API.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lietemper/lietemper.h"

#ifndef LIETEMPER_FIXTURE_DIR
#define LIETEMPER_FIXTURE_DIR ""
#endif

namespace {

int exit_code(lt_status s) {
  switch (s) {
    case LT_OK: return 0;
    case LT_ERR_BUDGET: return 3;
    case LT_ERR_INTERNAL:
    case LT_ERR_INCONSISTENT:
    case LT_ERR_VERIFY: return 1;
    default: return 2;
  }
}

int report_error(lt_status s) {
  std::cerr << "lietemper: " << lt_status_name(s) << ": " << lt_last_error() << "\n";
  return exit_code(s);
}

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  lt_string_free(s);
  return out;
}

struct Source {
  std::string family;
  std::string file;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* f = cmd->add_option("--family", src.family, "catalog family spec, e.g. triple_diagonal:sl2");
  auto* p = cmd->add_option("--file", src.file, "pair file");
  f->excludes(p);
  p->excludes(f);
}

lt_status open_pair(const Source& src, lt_pair** out) {
  if (!src.family.empty()) return lt_pair_from_family(src.family.c_str(), out);
  if (!src.file.empty()) return lt_pair_from_file(src.file.c_str(), out);
  return LT_ERR_ARGUMENT;
}

struct PairHandle {
  lt_pair* p = nullptr;
  ~PairHandle() { lt_pair_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperedness and sphericity checks for reductive pairs (g, h)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lt_version()));

  Source src;
  std::string questions, format = "human", output;
  lt_check_options opts;
  lt_check_options_init(&opts);

  auto* check = app.add_subcommand("check", "run verdict checks on a pair");
  add_source(check, src);
  check->add_option("--questions", questions, "comma list: tempered,real-spherical,complex-spherical,generic-stabilizer");
  check->add_option("--samples", opts.samples, "random Ad-words per sampled check")->capture_default_str();
  check->add_option("--seed", opts.seed, "random seed")->capture_default_str();
  check->add_option("--cone-budget", opts.cone_budget, "maximum cones or flats in the dominance check")->capture_default_str();
  check->add_option("--format", format, "human | machine")->check(CLI::IsMember({"human", "machine"}));
  check->add_option("-o,--output", output, "write the report to a file");

  std::string space = "g";
  std::vector<std::string> points;
  auto* rho = app.add_subcommand("rho", "weights and rho function on h, g/h or g");
  add_source(rho, src);
  rho->add_option("--space", space, "h | g/h | g")->check(CLI::IsMember({"h", "g/h", "g"}));
  rho->add_option("--point", points, "torus coordinates, e.g. 1,0 (repeatable)");
  rho->add_option("--format", format, "human | machine")->check(CLI::IsMember({"human", "machine"}));

  auto* catalog = app.add_subcommand("catalog", "list families and bundled fixtures");
  catalog->require_subcommand(1);
  std::string fixtures = LIETEMPER_FIXTURE_DIR, family;
  auto* list = catalog->add_subcommand("list", "families and fixtures");
  list->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();
  auto* show = catalog->add_subcommand("show", "parameter schema of a family");
  show->add_option("family", family, "family id")->required();

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "re-check every certificate in a machine report");
  verify->add_option("report", report_path, "report file ('-' for stdin)")->required();

  auto* exp = app.add_subcommand("export", "print a pair in the pair-file format");
  add_source(exp, src);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed() || rho->parsed() || exp->parsed()) {
    if (src.family.empty() && src.file.empty()) {
      std::cerr << "lietemper: one of --family or --file is required\n";
      return 2;
    }
    PairHandle pair;
    if (auto s = open_pair(src, &pair.p); s != LT_OK) return report_error(s);

    if (exp->parsed()) {
      char* text = nullptr;
      if (auto s = lt_pair_serialize(pair.p, &text); s != LT_OK) return report_error(s);
      std::cout << take(text);
      return 0;
    }

    if (rho->parsed()) {
      std::string joined;
      for (const auto& p : points) joined += p + ";";
      char* text = nullptr;
      if (auto s = lt_rho(pair.p, space.c_str(), joined.c_str(), format == "machine", &text); s != LT_OK)
        return report_error(s);
      std::cout << take(text);
      return 0;
    }

    opts.questions = questions.c_str();
    auto start = std::chrono::steady_clock::now();
    char* report = nullptr;
    if (auto s = lt_check(pair.p, &opts, &report); s != LT_OK) return report_error(s);
    std::string machine = take(report);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string text = machine;
    if (format == "human") {
      char* human = nullptr;
      if (auto s = lt_render_human(machine.c_str(), &human); s != LT_OK) return report_error(s);
      text = take(human);
      char buf[64];
      std::snprintf(buf, sizeof buf, "\nwall time %.3f s\n", seconds);
      text += buf;
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) {
        std::cerr << "lietemper: cannot write " << output << "\n";
        return 2;
      }
      out << text;
    }
    return 0;
  }

  if (list->parsed()) {
    char* text = nullptr;
    if (auto s = lt_catalog_list(fixtures.c_str(), &text); s != LT_OK) return report_error(s);
    std::cout << take(text);
    return 0;
  }
  if (show->parsed()) {
    char* text = nullptr;
    if (auto s = lt_catalog_show(family.c_str(), &text); s != LT_OK) return report_error(s);
    std::cout << take(text);
    return 0;
  }

  std::string doc;
  if (report_path == "-") {
    doc.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(report_path);
    if (!in) {
      std::cerr << "lietemper: cannot open " << report_path << "\n";
      return 2;
    }
    doc.assign(std::istreambuf_iterator<char>(in), {});
  }
  char* detail = nullptr;
  lt_status s = lt_verify_report(doc.c_str(), &detail);
  if (s != LT_OK && s != LT_ERR_VERIFY) return report_error(s);
  std::cout << take(detail);
  if (s == LT_ERR_VERIFY) {
    std::cerr << "lietemper: " << lt_last_error() << "\n";
    return 1;
  }
  std::cout << "all certificates verified\n";
  return 0;
}
