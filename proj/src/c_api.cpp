#include "lietemper/lietemper.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "lietemper/error.hpp"
#include "lietemper/pair_file.hpp"
#include "lietemper/report.hpp"

struct lt_pair {
  lietemper::Pair pair;
  lietemper::PairSource source;
};

namespace {

thread_local std::string last_error;

lt_status status_of(lietemper::ErrorCode c) {
  using lietemper::ErrorCode;
  switch (c) {
    case ErrorCode::ParseError: return LT_ERR_PARSE;
    case ErrorCode::ValidationError:
    case ErrorCode::NotSplit:
    case ErrorCode::NotAbelian:
    case ErrorCode::NotInSubalgebra:
    case ErrorCode::DimensionMismatch: return LT_ERR_VALIDATION;
    case ErrorCode::UnsupportedParams: return LT_ERR_UNSUPPORTED;
    case ErrorCode::IrrationalWeights: return LT_ERR_IRRATIONAL;
    case ErrorCode::ConeBudgetExceeded: return LT_ERR_BUDGET;
    case ErrorCode::MissingComplexData: return LT_ERR_MISSING_COMPLEX;
    case ErrorCode::InconsistentVerdicts: return LT_ERR_INCONSISTENT;
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateFunctional: return LT_ERR_ARGUMENT;
    case ErrorCode::Internal: return LT_ERR_INTERNAL;
  }
  return LT_ERR_INTERNAL;
}

template <class F>
lt_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const lietemper::Error& e) {
    last_error = std::string(lietemper::error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return LT_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lt_status need(const void* p, const char* what) {
  if (p) return LT_OK;
  last_error = std::string("InvalidArgument: ") + what + " is NULL";
  return LT_ERR_ARGUMENT;
}

lt_status make(lietemper::PairSource src, lt_pair** out) {
  auto pair = lietemper::load_source(src);
  *out = new lt_pair{std::move(pair), std::move(src)};
  return LT_OK;
}

}  // namespace

extern "C" {

void lt_check_options_init(lt_check_options* opts) {
  if (!opts) return;
  opts->questions = nullptr;
  opts->samples = 64;
  opts->seed = 0;
  opts->cone_budget = lietemper::kDefaultConeBudget;
}

lt_status lt_pair_from_family(const char* spec, lt_pair** out) {
  if (auto s = need(spec, "spec"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] { return make(lietemper::family_source(spec), out); });
}

lt_status lt_pair_from_file(const char* path, lt_pair** out) {
  if (auto s = need(path, "path"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] { return make(lietemper::file_source(path), out); });
}

lt_status lt_pair_from_text(const char* text, lt_pair** out) {
  if (auto s = need(text, "text"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] { return make(lietemper::text_source(text), out); });
}

void lt_pair_free(lt_pair* pair) { delete pair; }

lt_status lt_pair_serialize(const lt_pair* pair, char** out) {
  if (auto s = need(pair, "pair"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    *out = dup(lietemper::serialize_pair(pair->pair));
    return LT_OK;
  });
}

lt_status lt_pair_name(const lt_pair* pair, char** out) {
  if (auto s = need(pair, "pair"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    *out = dup(pair->pair.name);
    return LT_OK;
  });
}

lt_status lt_check(const lt_pair* pair, const lt_check_options* opts, char** report_out) {
  if (auto s = need(pair, "pair"); s != LT_OK) return s;
  if (auto s = need(report_out, "report_out"); s != LT_OK) return s;
  return guarded([&] {
    lt_check_options o;
    lt_check_options_init(&o);
    if (opts) o = *opts;
    lietemper::CheckRequest req;
    req.questions = lietemper::parse_question_list(o.questions ? o.questions : "");
    req.sampling.samples = o.samples;
    req.sampling.seed = o.seed;
    req.sampling.cone_budget = o.cone_budget;
    *report_out = dup(lietemper::run_check(pair->pair, pair->source, req));
    return LT_OK;
  });
}

lt_status lt_render_human(const char* report, char** out) {
  if (auto s = need(report, "report"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    *out = dup(lietemper::render_human(report));
    return LT_OK;
  });
}

lt_status lt_rho(const lt_pair* pair, const char* space, const char* points, int machine, char** out) {
  if (auto s = need(pair, "pair"); s != LT_OK) return s;
  if (auto s = need(space, "space"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    std::vector<lietemper::Vec> pts;
    if (points && *points) {
      std::stringstream in(points);
      std::string item;
      while (std::getline(in, item, ';'))
        if (!item.empty()) pts.push_back(lietemper::parse_point(item));
    }
    *out = dup(lietemper::rho_report(pair->pair, lietemper::parse_space(space), pts, machine != 0));
    return LT_OK;
  });
}

lt_status lt_catalog_list(const char* fixtures_dir, char** out) {
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    *out = dup(lietemper::catalog_listing(fixtures_dir ? fixtures_dir : ""));
    return LT_OK;
  });
}

lt_status lt_catalog_show(const char* family, char** out) {
  if (auto s = need(family, "family"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    *out = dup(lietemper::catalog_show(family));
    return LT_OK;
  });
}

lt_status lt_verify_report(const char* report, char** out) {
  if (auto s = need(report, "report"); s != LT_OK) return s;
  if (auto s = need(out, "out"); s != LT_OK) return s;
  return guarded([&] {
    auto r = lietemper::verify_report(report);
    std::string text;
    for (const auto& l : r.lines) text += l + "\n";
    *out = dup(text);
    if (!r.ok) last_error = "certificate re-verification failed";
    return r.ok ? LT_OK : LT_ERR_VERIFY;
  });
}

const char* lt_last_error(void) { return last_error.c_str(); }

const char* lt_status_name(lt_status status) {
  switch (status) {
    case LT_OK: return "ok";
    case LT_ERR_PARSE: return "parse error";
    case LT_ERR_VALIDATION: return "validation error";
    case LT_ERR_UNSUPPORTED: return "unsupported parameters";
    case LT_ERR_IRRATIONAL: return "irrational weights";
    case LT_ERR_BUDGET: return "cone budget exceeded";
    case LT_ERR_MISSING_COMPLEX: return "missing complexification data";
    case LT_ERR_INCONSISTENT: return "inconsistent verdicts";
    case LT_ERR_ARGUMENT: return "invalid argument";
    case LT_ERR_INTERNAL: return "internal error";
    case LT_ERR_VERIFY: return "verification failed";
  }
  return "unknown status";
}

void lt_string_free(char* s) { std::free(s); }

const char* lt_version(void) { return lietemper::kToolVersion; }

}  // extern "C"
