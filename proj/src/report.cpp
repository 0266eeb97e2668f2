#include "lietemper/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lietemper/catalog.hpp"
#include "lietemper/error.hpp"
#include "lietemper/pair_file.hpp"

namespace lietemper {

using json = nlohmann::json;

namespace {

const std::vector<Question> kAllQuestions = {Question::Tempered, Question::RealSpherical, Question::ComplexSpherical,
                                             Question::GenericStabilizerAbelian};

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json vecs_json(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

Vec vec_from(const json& a) {
  Vec v;
  for (const auto& x : a) v.push_back(parse_rat(x.get<std::string>()));
  return v;
}

std::vector<Vec> vecs_from(const json& a) {
  std::vector<Vec> out;
  for (const auto& v : a) out.push_back(vec_from(v));
  return out;
}

json rho_json(const RhoFunction& f) {
  json forms = json::array();
  for (const auto& t : f.forms) forms.push_back({{"form", vec_json(t.form)}, {"multiplicity", t.multiplicity}});
  return {{"rank", f.rank}, {"forms", forms}};
}

RhoFunction rho_from(const json& j) {
  RhoFunction f;
  f.rank = j.at("rank").get<std::size_t>();
  for (const auto& t : j.at("forms")) f.forms.push_back({vec_from(t.at("form")), t.at("multiplicity").get<std::size_t>()});
  return f;
}

json certificate_json(const Certificate& c) {
  if (const auto* w = std::get_if<WordCertificate>(&c))
    return {{"kind", "open_orbit_word"}, {"xi", vec_json(w->xi)}, {"letters", vecs_json(w->letters)},
            {"complexified", w->complexified}};
  if (const auto* d = std::get_if<DominanceCertificate>(&c)) {
    json j = {{"kind", "dominance"},
              {"rank_zero_shortcut", d->rank_zero_shortcut},
              {"rho_h", rho_json(d->rho_h)},
              {"rho_g_mod_h", rho_json(d->rho_g_mod_h)},
              {"rays", vecs_json(d->rays)},
              {"cone_count", d->cone_count},
              {"margin", d->margin ? json(d->margin->get_str()) : json()},
              {"witness", d->witness ? vec_json(*d->witness) : json()}};
    if (d->witness) {
      j["rho_h_at_witness"] = rho_eval(d->rho_h, *d->witness).get_str();
      j["rho_g_mod_h_at_witness"] = rho_eval(d->rho_g_mod_h, *d->witness).get_str();
    }
    return j;
  }
  if (const auto* s = std::get_if<StabilizerCertificate>(&c))
    return {{"kind", "stabilizer"}, {"letters", vecs_json(s->letters)}, {"dimension", s->dimension},
            {"basis", vecs_json(s->basis)}, {"abelian", s->abelian}};
  return nullptr;
}

Certificate certificate_from(const json& j) {
  if (j.is_null()) return std::monostate{};
  const std::string kind = j.at("kind");
  if (kind == "open_orbit_word")
    return WordCertificate{vec_from(j.at("xi")), vecs_from(j.at("letters")), j.at("complexified").get<bool>()};
  if (kind == "dominance") {
    DominanceCertificate d;
    d.rank_zero_shortcut = j.at("rank_zero_shortcut");
    d.rho_h = rho_from(j.at("rho_h"));
    d.rho_g_mod_h = rho_from(j.at("rho_g_mod_h"));
    d.rays = vecs_from(j.at("rays"));
    d.cone_count = j.at("cone_count");
    if (!j.at("margin").is_null()) d.margin = parse_rat(j.at("margin").get<std::string>());
    if (!j.at("witness").is_null()) d.witness = vec_from(j.at("witness"));
    return d;
  }
  if (kind == "stabilizer")
    return StabilizerCertificate{vecs_from(j.at("letters")), j.at("dimension").get<std::size_t>(),
                                 vecs_from(j.at("basis")), j.at("abelian").get<bool>()};
  fail(ErrorCode::ParseError, "unknown certificate kind '" + kind + "'");
}

json verdict_json(const Verdict& v) {
  return {{"question", question_name(v.question)}, {"outcome", outcome_name(v.outcome)},
          {"samples_used", v.samples_used},       {"seed", v.seed},
          {"notes", v.notes},                     {"certificate", certificate_json(v.certificate)}};
}

Verdict verdict_from(const json& j) {
  Verdict v;
  auto q = parse_question(j.at("question").get<std::string>());
  auto o = parse_outcome(j.at("outcome").get<std::string>());
  if (!q || !o) fail(ErrorCode::ParseError, "report verdict has an unknown question or outcome");
  v.question = *q;
  v.outcome = *o;
  v.samples_used = j.at("samples_used");
  v.seed = j.at("seed");
  v.notes = j.at("notes").get<std::vector<std::string>>();
  v.certificate = certificate_from(j.at("certificate"));
  return v;
}

json source_json(const PairSource& s) {
  if (s.kind == PairSource::Kind::Family) return {{"kind", "family"}, {"spec", s.spec}};
  return {{"kind", "file"}, {"path", s.spec}, {"text", s.text}};
}

PairSource source_from(const json& j) {
  if (j.at("kind") == "family") return family_source(j.at("spec"));
  return text_source(j.at("text"), j.at("path"));
}

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("report is not valid JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

PairSource family_source(const std::string& spec) { return {PairSource::Kind::Family, spec, ""}; }

PairSource file_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return {PairSource::Kind::File, path, buf.str()};
}

PairSource text_source(const std::string& text, const std::string& label) {
  return {PairSource::Kind::File, label, text};
}

Pair load_source(const PairSource& src) {
  if (src.kind == PairSource::Kind::Family) return construct(src.spec);
  return parse_pair_file(src.text, src.spec);
}

std::vector<Question> parse_question_list(const std::string& csv) {
  std::vector<Question> out;
  if (csv.empty() || csv == "all") return out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    auto q = parse_question(item);
    if (!q) fail(ErrorCode::InvalidArgument, "unknown question '" + item + "'");
    if (std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  return out;
}

std::string run_check(const Pair& pair, const PairSource& src, const CheckRequest& req) {
  json report_notes = json::array();
  std::vector<Question> questions = req.questions;
  if (questions.empty()) {
    for (auto q : kAllQuestions) {
      if (q == Question::ComplexSpherical && !pair.complexification) {
        report_notes.push_back("complex_spherical skipped: the pair carries no complexification data");
        continue;
      }
      questions.push_back(q);
    }
  }
  std::vector<Verdict> verdicts;
  for (auto q : questions) {
    switch (q) {
      case Question::Tempered: verdicts.push_back(check_tempered(pair, req.sampling)); break;
      case Question::RealSpherical: verdicts.push_back(check_real_spherical(pair, req.sampling)); break;
      case Question::ComplexSpherical: verdicts.push_back(check_complex_spherical(pair, req.sampling)); break;
      case Question::GenericStabilizerAbelian: verdicts.push_back(check_generic_stabilizer(pair, req.sampling)); break;
    }
  }
  const bool complex = is_complex_pair(pair);
  auto conclusions = interpret(verdicts, complex);

  json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = {{"name", "lietemper"}, {"version", kToolVersion}};
  doc["pair"] = {{"name", pair.name},
                 {"provenance", pair.provenance},
                 {"source", source_json(src)},
                 {"dim_g", pair.g->dim()},
                 {"dim_h", pair.h->dim()},
                 {"torus_h_rank", pair.torus_h.rank()},
                 {"torus_g_rank", pair.torus_g.rank()},
                 {"complex_pair", complex},
                 {"notes", pair.notes}};
  doc["options"] = {{"samples", req.sampling.samples},
                    {"seed", req.sampling.seed},
                    {"cone_budget", req.sampling.cone_budget},
                    {"max_word_length", req.sampling.max_word_length},
                    {"coefficient_bound", req.sampling.coefficient_bound}};
  doc["verdicts"] = json::array();
  for (const auto& v : verdicts) doc["verdicts"].push_back(verdict_json(v));
  doc["conclusions"] = json::array();
  for (const auto& c : conclusions) doc["conclusions"].push_back({{"statement", c.statement}, {"citation", c.citation}});
  doc["notes"] = report_notes;
  return dump(doc);
}

std::string render_human(const std::string& machine_report) {
  json doc = parse_doc(machine_report);
  std::ostringstream os;
  const auto& p = doc["pair"];
  os << "pair " << p["name"].get<std::string>() << "  (" << p["provenance"].get<std::string>() << ")\n";
  os << "  dim g = " << p["dim_g"] << ", dim h = " << p["dim_h"] << ", rank torus_h = " << p["torus_h_rank"]
     << ", rank torus_g = " << p["torus_g_rank"] << (p["complex_pair"].get<bool>() ? ", complex pair" : "") << "\n";
  os << "  seed " << doc["options"]["seed"] << ", samples " << doc["options"]["samples"] << "\n\n";
  for (const auto& v : doc["verdicts"]) {
    os << std::left << std::setw(28) << v["question"].get<std::string>() << std::setw(15) << v["outcome"].get<std::string>();
    const auto& c = v["certificate"];
    if (!c.is_null()) {
      const std::string kind = c["kind"];
      if (kind == "open_orbit_word")
        os << "word of " << c["letters"].size() << " letters" << (c["complexified"].get<bool>() ? " in g_C" : "");
      else if (kind == "dominance" && c["rank_zero_shortcut"].get<bool>())
        os << "rank-0 torus in h";
      else if (kind == "dominance" && !c["witness"].is_null())
        os << "witness Y = (" << [&] {
          std::string s;
          for (const auto& x : c["witness"]) s += (s.empty() ? "" : ", ") + x.get<std::string>();
          return s;
        }() << "): rho_h = " << c["rho_h_at_witness"].get<std::string>()
           << " > rho_g/h = " << c["rho_g_mod_h_at_witness"].get<std::string>();
      else if (kind == "dominance")
        os << c["rays"].size() << " rays, margin " << c["margin"].get<std::string>();
      else if (kind == "stabilizer")
        os << "dim " << c["dimension"] << (c["abelian"].get<bool>() ? ", abelian" : ", non-abelian");
    }
    os << "  [" << v["samples_used"] << " samples]\n";
    for (const auto& n : v["notes"]) os << "    note: " << n.get<std::string>() << "\n";
  }
  if (!doc["conclusions"].empty()) os << "\nconclusions:\n";
  for (const auto& c : doc["conclusions"])
    os << "  - " << c["statement"].get<std::string>() << "\n      (" << c["citation"].get<std::string>() << ")\n";
  if (!p["notes"].empty()) os << "\nassumptions:\n";
  for (const auto& n : p["notes"]) os << "  - " << n.get<std::string>() << "\n";
  for (const auto& n : doc["notes"]) os << "note: " << n.get<std::string>() << "\n";
  return os.str();
}

Space parse_space(const std::string& s) {
  if (s == "h") return Space::H;
  if (s == "g/h" || s == "g_mod_h" || s == "g-mod-h") return Space::GModH;
  if (s == "g") return Space::G;
  fail(ErrorCode::InvalidArgument, "unknown space '" + s + "' (h | g/h | g)");
}

Vec parse_point(const std::string& s) {
  Vec v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_rat(item));
  return v;
}

std::string rho_report(const Pair& pair, Space space, const std::vector<Vec>& points, bool machine) {
  const SplitTorus& torus = space == Space::G ? pair.torus_g : pair.torus_h;
  auto ws = weight_decomposition(torus, space);
  auto rho = rho_from_weights(ws);
  json doc;
  doc["schema"] = "lietemper.rho/1";
  doc["pair"] = pair.name;
  doc["space"] = space_label(space);
  doc["torus"] = space == Space::G ? "torus_g" : "torus_h";
  doc["rank"] = ws.rank;
  doc["dim"] = ws.space_dim;
  doc["weights"] = json::array();
  for (const auto& w : ws.weights) doc["weights"].push_back({{"form", vec_json(w.form)}, {"multiplicity", w.multiplicity}});
  doc["rho"] = rho_json(rho);
  doc["values"] = json::array();
  for (const auto& y : points) {
    if (y.size() != ws.rank)
      fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(y.size()) + " coordinates, torus rank is " +
                                             std::to_string(ws.rank));
    doc["values"].push_back({{"point", vec_json(y)}, {"value", rho_eval(rho, y).get_str()}});
  }
  if (machine) return dump(doc);
  std::ostringstream os;
  auto show = [](const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
  };
  os << "rho on " << space_label(space) << " for " << pair.name << " (rank " << ws.rank << ", dim " << ws.space_dim << ")\n";
  os << "weights:\n";
  for (const auto& w : ws.weights) os << "  " << show(w.form) << " x " << w.multiplicity << "\n";
  os << "rho(Y) =";
  if (rho.forms.empty()) os << " 0";
  for (std::size_t i = 0; i < rho.forms.size(); ++i)
    os << (i ? " +" : "") << " " << rho.forms[i].multiplicity << "|" << show(rho.forms[i].form) << ".Y|";
  os << "\n";
  for (const auto& y : points) os << "rho" << show(y) << " = " << rho_eval(rho, y).get_str() << "\n";
  return os.str();
}

VerifyOutcome verify_report(const std::string& machine_report) {
  json doc = parse_doc(machine_report);
  if (doc.value("schema", "") != kReportSchema) fail(ErrorCode::ParseError, "not a lietemper report (schema mismatch)");
  VerifyOutcome out;
  Pair pair = load_source(source_from(doc.at("pair").at("source")));
  for (const auto& vj : doc.at("verdicts")) {
    Verdict v = verdict_from(vj);
    std::string line = std::string(question_name(v.question)) + " " + outcome_name(v.outcome) + ": ";
    if (v.outcome != Outcome::YesCertified && v.outcome != Outcome::NoCertified &&
        std::holds_alternative<std::monostate>(v.certificate)) {
      out.lines.push_back(line + "nothing to verify");
      continue;
    }
    auto r = verify_certificate(pair, v);
    out.ok = out.ok && r.ok;
    out.lines.push_back(line + (r.ok ? "ok" : "FAILED") + " (" + r.detail + ")");
  }
  return out;
}

std::string catalog_listing(const std::string& fixtures_dir) {
  std::ostringstream os;
  os << "families:\n";
  for (const auto& f : family_table()) os << "  " << std::left << std::setw(30) << f.id << f.summary << "\n";
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (!fixtures_dir.empty() && fs::is_directory(fixtures_dir))
    for (const auto& e : fs::directory_iterator(fixtures_dir))
      if (e.path().extension() == ".pair") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (!files.empty()) os << "\nfixtures (" << fixtures_dir << "):\n";
  for (const auto& path : files) {
    try {
      Pair p = load_pair_file(path.string());
      os << "  " << path.filename().string() << "  " << p.name << "\n";
      for (const auto& e : p.expectations)
        os << "      expect " << question_name(e.question) << " = " << outcome_name(e.outcome) << "  [" << e.tag << "]\n";
    } catch (const Error& e) {
      os << "  " << path.filename().string() << "  (unreadable: " << e.what() << ")\n";
    }
  }
  return os.str();
}

std::string catalog_show(const std::string& family) {
  const FamilyInfo* f = find_family(family);
  if (!f) fail(ErrorCode::UnsupportedParams, "unknown family '" + family + "'");
  std::ostringstream os;
  os << "family   " << f->id << "\n";
  os << "summary  " << f->summary << "\n";
  os << "params   " << f->id << ":" << f->schema << "\n";
  os << "example  " << f->example << "\n";
  os << "algebra tokens: sl<n> (2..6), so<p>_<q> (2 <= p+q <= 8), su<p>_<q> (2 <= p+q <= 8), sp<n> (1..4),\n"
        "                slc<n> (2..4), soc<n> (3..4), spc<n> (1..2); join up to three with '+'\n";
  return os.str();
}

}  // namespace lietemper
