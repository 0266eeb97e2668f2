#pragma once

#include <string>
#include <vector>

#include "lietemper/geometry.hpp"

namespace lietemper {

inline constexpr const char* kReportSchema = "lietemper.report/1";
inline constexpr const char* kToolVersion = "1.0.0";

/// Where a pair came from; embedded in reports so they can be re-verified.
struct PairSource {
  enum class Kind { Family, File } kind = Kind::Family;
  std::string spec;  // family spec, or the file path as given
  std::string text;  // file contents (File only)
};

PairSource family_source(const std::string& spec);
/// Reads the file; throws ParseError if unreadable.
PairSource file_source(const std::string& path);
PairSource text_source(const std::string& text, const std::string& label = "<text>");
Pair load_source(const PairSource& src);

/// "tempered,real-spherical,..." or "all"; throws InvalidArgument on unknown names.
std::vector<Question> parse_question_list(const std::string& csv);

struct CheckRequest {
  std::vector<Question> questions;  // empty: all four (complex_spherical skipped without complex data)
  SamplingOptions sampling;
};

/// Runs the checks and returns the machine report (sorted keys, exact fractions as strings).
/// Errors from the checks propagate as lietemper::Error.
std::string run_check(const Pair& pair, const PairSource& src, const CheckRequest& req);
/// Human summary of a machine report.
std::string render_human(const std::string& machine_report);

/// Weight multiset, rho forms and exact values on one space.
std::string rho_report(const Pair& pair, Space space, const std::vector<Vec>& points, bool machine);
Space parse_space(const std::string& s);  // "h", "g/h" (or "g_mod_h"), "g"
Vec parse_point(const std::string& s);    // "1,-1/2,0"

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> lines;  // one per verdict
};
/// Rebuilds the pair from the embedded source and re-checks every certificate.
VerifyOutcome verify_report(const std::string& machine_report);

std::string catalog_listing(const std::string& fixtures_dir);
/// Throws UnsupportedParams for an unknown family id.
std::string catalog_show(const std::string& family);

}  // namespace lietemper
