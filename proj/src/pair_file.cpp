#include "lietemper/pair_file.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>

#include "lietemper/error.hpp"

namespace lietemper {

namespace {

constexpr const char* kHeader = "lie-pair-file 1";

struct Located {
  Vec value;
  std::size_t line;
};

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

class Parser {
 public:
  Parser(const std::string& text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  Pair run() {
    std::istringstream in(text_);
    std::string raw;
    bool header = false;
    while (std::getline(in, raw)) {
      ++line_;
      std::string s = trim(raw);
      if (s.empty() || s[0] == '#') continue;
      if (!header) {
        if (s != kHeader) parse_error("expected header '" + std::string(kHeader) + "'");
        header = true;
        continue;
      }
      directive(s);
    }
    if (!header) parse_error("empty file (missing header)");
    return build();
  }

 private:
  [[noreturn]] void parse_error(const std::string& msg, std::size_t at = 0) const {
    fail(ErrorCode::ParseError, origin_ + ":" + std::to_string(at ? at : line_) + ": " + msg);
  }
  [[noreturn]] void invalid(const std::string& msg, std::size_t at) const {
    fail(ErrorCode::ValidationError, origin_ + ":" + std::to_string(at) + ": " + msg);
  }

  std::size_t label(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) parse_error("unknown basis label '" + l + "'");
    return it->second;
  }

  Rat fraction(const std::string& t) const {
    try {
      return parse_rat(t);
    } catch (const Error&) {
      parse_error("malformed fraction '" + t + "'");
    }
  }

  void need_labels() const {
    if (labels_.empty()) parse_error("'labels' must precede this directive");
  }

  // Dense list of dim fractions, or sparse label=coeff terms.
  Vec vector(const std::vector<std::string>& toks) const {
    need_labels();
    const std::size_t n = labels_.size();
    if (toks.empty()) parse_error("empty vector");
    Vec v(n);
    if (toks[0].find('=') == std::string::npos) {
      if (toks.size() != n) parse_error("dense vector needs " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
      for (std::size_t i = 0; i < n; ++i) v[i] = fraction(toks[i]);
      return v;
    }
    for (const auto& t : toks) {
      auto eq = t.find('=');
      if (eq == std::string::npos) parse_error("mixed dense and sparse entries in '" + t + "'");
      v[label(t.substr(0, eq))] += fraction(t.substr(eq + 1));
    }
    return v;
  }

  std::vector<std::string> after_colon(const std::vector<std::string>& toks, std::size_t lead) const {
    if (toks.size() <= lead || toks[lead] != ":") parse_error("expected ':' after '" + toks[lead - 1] + "'");
    return {toks.begin() + lead + 1, toks.end()};
  }

  void directive(const std::string& s) {
    auto toks = tokens_of(s);
    const std::string& key = toks[0];
    auto rest = trim(s.substr(key.size()));
    if (key == "name") {
      if (rest.empty()) parse_error("name is empty");
      name_ = rest;
    } else if (key == "provenance") {
      provenance_ = rest;
    } else if (key == "note") {
      notes_.push_back(rest);
    } else if (key == "algebra") {
      algebra_name_ = rest;
    } else if (key == "labels") {
      if (!labels_.empty()) parse_error("labels given twice");
      static const std::regex ok(R"(^[A-Za-z_][A-Za-z0-9_.']*$)");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!std::regex_match(toks[i], ok)) parse_error("invalid label '" + toks[i] + "'");
        if (!index_.emplace(toks[i], labels_.size()).second) parse_error("duplicate label '" + toks[i] + "'");
        labels_.push_back(toks[i]);
      }
      if (labels_.empty()) parse_error("labels needs at least one label");
    } else if (key == "const") {
      need_labels();
      if (toks.size() != 5) parse_error("const needs three labels and a fraction");
      auto k = std::make_tuple(label(toks[1]), label(toks[2]), label(toks[3]));
      if (!consts_.emplace(k, std::make_pair(fraction(toks[4]), line_)).second) parse_error("constant given twice");
    } else if (key == "matrix") {
      need_labels();
      if (toks.size() < 2) parse_error("matrix needs a label");
      std::size_t i = label(toks[1]);
      auto body = after_colon(toks, 2);
      std::vector<std::vector<Rat>> rows(1);
      for (const auto& t : body) {
        if (t == ";")
          rows.emplace_back();
        else
          rows.back().push_back(fraction(t));
      }
      const std::size_t m = rows.size();
      Matrix mat(m, m);
      for (std::size_t r = 0; r < m; ++r) {
        if (rows[r].size() != m) parse_error("matrix must be square (row " + std::to_string(r + 1) + ")");
        for (std::size_t c = 0; c < m; ++c) mat(r, c) = rows[r][c];
      }
      if (!matrices_.emplace(i, std::make_pair(mat, line_)).second) parse_error("matrix given twice");
    } else if (key == "complex_structure") {
      need_labels();
      if (toks.size() < 2) parse_error("complex_structure needs a label");
      std::size_t i = label(toks[1]);
      if (!complex_.emplace(i, vector(after_colon(toks, 2))).second) parse_error("complex_structure given twice");
    } else if (key == "torus_g" || key == "compact_cartan" || key == "sub" || key == "torus_h") {
      auto v = vector(after_colon(toks, 1));
      rows_[key].push_back({std::move(v), line_});
      if (key == "compact_cartan") complexification_ = true;
    } else if (key == "complexification") {
      if (toks.size() != 1) parse_error("complexification takes no arguments");
      complexification_ = true;
    } else if (key == "expect") {
      if (toks.size() != 4) parse_error("expect needs question, outcome and tag");
      auto q = parse_question(toks[1]);
      auto o = parse_outcome(toks[2]);
      if (!q) parse_error("unknown question '" + toks[1] + "'");
      if (!o) parse_error("unknown outcome '" + toks[2] + "'");
      expectations_.push_back({*q, *o, toks[3]});
    } else {
      parse_error("unknown directive '" + key + "'");
    }
  }

  std::vector<Vec> values(const std::string& key) const {
    std::vector<Vec> out;
    auto it = rows_.find(key);
    if (it != rows_.end())
      for (const auto& r : it->second) out.push_back(r.value);
    return out;
  }

  std::size_t first_line(const std::string& key) const {
    auto it = rows_.find(key);
    return it == rows_.end() || it->second.empty() ? line_ : it->second.front().line;
  }

  std::size_t row_line(const std::string& key, std::size_t i) const { return rows_.at(key).at(i).line; }

  Pair build() {
    if (name_.empty()) parse_error("missing 'name'", line_);
    if (labels_.empty()) parse_error("missing 'labels'", line_);
    const std::size_t n = labels_.size();
    std::vector<Rat> c(n * n * n);
    for (const auto& [k, v] : consts_) {
      auto [a, b, t] = k;
      c[(a * n + b) * n + t] = v.first;
      if (!consts_.count({b, a, t})) c[(b * n + a) * n + t] = -v.first;
    }
    LieAlgebra g(algebra_name_.empty() ? name_ : algebra_name_, labels_, std::move(c));
    if (!matrices_.empty()) {
      if (matrices_.size() != n) invalid("matrix realization must cover every basis element", matrices_.begin()->second.second);
      std::vector<Matrix> mats;
      for (const auto& [i, m] : matrices_) mats.push_back(m.first);
      const std::size_t s = mats[0].rows();
      for (const auto& [i, m] : matrices_)
        if (m.first.rows() != s) invalid("realization matrices must share a size", m.second);
      g.set_realization(std::move(mats));
    }
    if (!complex_.empty()) {
      if (complex_.size() != n) parse_error("complex_structure must cover every basis element", line_);
      Matrix J(n, n);
      for (const auto& [j, col] : complex_)
        for (std::size_t i = 0; i < n; ++i) J(i, j) = col[i];
      g.set_complex_structure(std::move(J));
    }
    auto rep = validate(g);
    if (!rep.ok) {
      std::size_t at = line_;
      if (rep.kind == "antisymmetry" || rep.kind == "jacobi") {
        // point at the earliest constant line touching the reported indices
        for (const auto& [k, v] : consts_) {
          auto [a, b, t] = k;
          (void)t;
          for (auto i : rep.indices)
            if (a == i || b == i) at = std::min(at, v.second);
        }
      } else if (rep.kind == "realization" && !rep.indices.empty()) {
        at = matrices_.at(rep.indices[0]).second;
      }
      invalid(rep.kind + " violation: " + rep.message, at);
    }
    auto gp = std::make_shared<const LieAlgebra>(std::move(g));
    auto sub = values("sub");
    if (!sub.empty()) {
      if (rank(sub, n) != sub.size()) invalid("sub rows are linearly dependent", first_line("sub"));
      if (auto bad = closure_violation(*gp, sub))
        invalid("sub rows are not bracket-closed: [row at line " + std::to_string(row_line("sub", bad->first)) +
                    ", row at line " + std::to_string(row_line("sub", bad->second)) + "] leaves the span",
                row_line("sub", bad->second));
    }
    std::optional<ComplexificationData> cx;
    if (complexification_) cx = ComplexificationData{values("compact_cartan")};
    try {
      Pair p = make_pair(name_, provenance_, gp, sub, values("torus_h"), values("torus_g"), cx);
      p.notes = notes_;
      p.expectations = expectations_;
      return p;
    } catch (const Error& e) {
      fail(e.code(), origin_ + ": " + e.what());
    }
  }

  const std::string& text_;
  std::string origin_;
  std::size_t line_ = 0;
  std::string name_, provenance_, algebra_name_;
  std::vector<std::string> notes_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<Rat, std::size_t>> consts_;
  std::map<std::size_t, std::pair<Matrix, std::size_t>> matrices_;
  std::map<std::size_t, Vec> complex_;
  std::map<std::string, std::vector<Located>> rows_;
  bool complexification_ = false;
  std::vector<Expectation> expectations_;
};

std::string sparse(const LieAlgebra& g, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out += (out.empty() ? "" : " ") + g.labels()[i] + "=" + v[i].get_str();
  if (out.empty())
    for (std::size_t i = 0; i < v.size(); ++i) out += i ? " 0" : "0";
  return out;
}

}  // namespace

Pair parse_pair_file(const std::string& text, const std::string& origin) { return Parser(text, origin).run(); }

Pair load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pair_file(buf.str(), path);
}

std::string serialize_pair(const Pair& p) {
  const LieAlgebra& g = *p.g;
  const std::size_t n = g.dim();
  std::ostringstream os;
  os << kHeader << "\n";
  os << "name " << p.name << "\n";
  if (!p.provenance.empty()) os << "provenance " << p.provenance << "\n";
  for (const auto& note : p.notes) os << "note " << note << "\n";
  if (g.name() != p.name) os << "algebra " << g.name() << "\n";
  os << "labels";
  for (const auto& l : g.labels()) os << " " << l;
  os << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& t : g.bracket_terms(i, j))
        os << "const " << g.labels()[i] << " " << g.labels()[j] << " " << g.labels()[t.index] << " " << t.coeff.get_str()
           << "\n";
  if (const auto& real = g.realization())
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix& m = (*real)[i];
      os << "matrix " << g.labels()[i] << " :";
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << " ;";
        for (std::size_t c = 0; c < m.cols(); ++c) os << " " << m(r, c).get_str();
      }
      os << "\n";
    }
  if (const auto& J = g.complex_structure())
    for (std::size_t j = 0; j < n; ++j) os << "complex_structure " << g.labels()[j] << " : " << sparse(g, J->col(j)) << "\n";
  for (const auto& r : p.torus_g.basis()) os << "torus_g : " << sparse(g, r) << "\n";
  if (p.complexification) {
    os << "complexification\n";
    for (const auto& r : p.complexification->compact_cartan) os << "compact_cartan : " << sparse(g, r) << "\n";
  }
  for (const auto& r : p.h->basis()) os << "sub : " << sparse(g, r) << "\n";
  for (const auto& r : p.torus_h.basis()) os << "torus_h : " << sparse(g, r) << "\n";
  for (const auto& e : p.expectations)
    os << "expect " << question_name(e.question) << " " << outcome_name(e.outcome) << " " << e.tag << "\n";
  return os.str();
}

bool same_pair(const Pair& a, const Pair& b) {
  return a.name == b.name && a.provenance == b.provenance && *a.g == *b.g && a.h->basis() == b.h->basis() &&
         a.torus_h.basis() == b.torus_h.basis() && a.torus_g.basis() == b.torus_g.basis() &&
         a.complexification == b.complexification && a.notes == b.notes && a.expectations == b.expectations;
}

}  // namespace lietemper
