#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lietemper/lie_algebra.hpp"
#include "lietemper/polyhedral.hpp"
#include "lietemper/weights.hpp"

namespace lietemper {

enum class Question { Tempered, RealSpherical, ComplexSpherical, GenericStabilizerAbelian };
enum class Outcome { YesCertified, NoCertified, ProbableNo, Unknown };

const char* question_name(Question q);  // "tempered", "real_spherical", ...
const char* outcome_name(Outcome o);    // "yes_certified", ...
std::optional<Question> parse_question(const std::string& s);  // accepts '-' or '_'
std::optional<Outcome> parse_outcome(const std::string& s);

/// A fixture annotation: the outcome the regression suite expects.
struct Expectation {
  Question question;
  Outcome outcome;
  std::string tag;  // "reference", "derived" or "trivial"
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

/// Compact part t_c of a Cartan subalgebra a_g + t_c of g (rows in g-coordinates).
/// The complexification's split torus is (a_g, 0) + (0, t_c).
struct ComplexificationData {
  std::vector<Vec> compact_cartan;
  friend bool operator==(const ComplexificationData&, const ComplexificationData&) = default;
};

/// Validated (g, h) with designated split tori.
struct Pair {
  std::string name;
  std::string provenance;
  LieAlgebraPtr g;
  SubalgebraPtr h;
  SubalgebraPtr whole;  // g as a subalgebra of itself, parent of torus_g
  SplitTorus torus_h;
  SplitTorus torus_g;
  std::optional<ComplexificationData> complexification;
  std::vector<std::string> notes;  // documented assumptions of the construction
  std::vector<Expectation> expectations;
};

/// Validates every invariant (algebra, closure, tori) and throws ValidationError otherwise.
Pair make_pair(std::string name, std::string provenance, LieAlgebraPtr g, std::vector<Vec> h_rows,
               std::vector<Vec> torus_h_rows, std::vector<Vec> torus_g_rows,
               std::optional<ComplexificationData> complexification = std::nullopt);

/// g carries a complex structure J and h is J-stable.
bool is_complex_pair(const Pair& p);

/// g (x) C realified: basis e_k, i e_k (indices k and dim + k).
LieAlgebra complexify_algebra(const LieAlgebra& g);
/// (g_C, h_C) with the split torus (a_g, 0) + (0, t_c). Throws MissingComplexData.
Pair complexify(const Pair& p);

struct ParabolicSubalgebra {
  Vec xi;                                  // chamber functional in torus coordinates
  Subspace space;                          // p = m + a + n
  Subspace levi;                           // zero-weight space m + a
  std::vector<Vec> positive_root_vectors;  // basis of n
  std::vector<Vec> negative_root_vectors;  // basis of the opposite nilradical
};

/// xi nullopt draws a generic functional (seeded rejection sampling).
/// Throws DegenerateFunctional if a supplied xi annihilates a nonzero weight.
ParabolicSubalgebra minimal_parabolic(const SplitTorus& torus_g, const std::optional<Vec>& xi, std::uint64_t seed = 0);
ParabolicSubalgebra minimal_parabolic(const Pair& p, const std::optional<Vec>& xi, std::uint64_t seed = 0);

struct SamplingOptions {
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  std::size_t max_word_length = 8;
  long coefficient_bound = 9;
  std::size_t cone_budget = kDefaultConeBudget;
};

/// Word w = exp(ad Z_1) ... exp(ad Z_L) with each Z_i ad-nilpotent.
struct WordCertificate {
  Vec xi;
  std::vector<Vec> letters;
  bool complexified = false;
};

struct DominanceCertificate {
  bool rank_zero_shortcut = false;
  RhoFunction rho_h;
  RhoFunction rho_g_mod_h;
  std::vector<Vec> rays;
  std::optional<Rat> margin;
  std::optional<Vec> witness;
  std::size_t cone_count = 0;
};

struct StabilizerCertificate {
  std::vector<Vec> letters;
  std::size_t dimension = 0;
  std::vector<Vec> basis;  // h cap Ad(w) h, canonical echelon rows
  bool abelian = true;
};

using Certificate = std::variant<std::monostate, WordCertificate, DominanceCertificate, StabilizerCertificate>;

struct Verdict {
  Question question;
  Outcome outcome = Outcome::Unknown;
  Certificate certificate;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

Verdict check_real_spherical(const Pair& p, const SamplingOptions& opt = {});
Verdict check_complex_spherical(const Pair& p, const SamplingOptions& opt = {});
Verdict check_tempered(const Pair& p, const SamplingOptions& opt = {});

struct GenericStabilizer {
  std::size_t dimension = 0;
  Subspace representative;
  bool abelian = true;
  std::vector<Vec> letters;
  std::size_t samples_used = 0;
};
GenericStabilizer generic_stabilizer(const Pair& p, const SamplingOptions& opt = {});
/// generic_stabilizer wrapped as a verdict (yes = abelian, probable_no = not abelian).
Verdict check_generic_stabilizer(const Pair& p, const SamplingOptions& opt = {});

struct Conclusion {
  std::string statement;
  std::string citation;
  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};
/// Cited consequences of the verdicts; throws InconsistentVerdicts when the
/// tempered verdict and the abelian-stabilizer test disagree on a complex pair.
std::vector<Conclusion> interpret(const std::vector<Verdict>& verdicts, bool complex_pair);

/// Exact re-verification of a verdict's certificate from scratch.
struct Recheck {
  bool ok = false;
  std::string detail;
};
Recheck verify_certificate(const Pair& p, const Verdict& v);

/// Ad(w) applied to vectors exactly: exp(ad Z_L) first, exp(ad Z_1) last.
std::vector<Vec> apply_word(const LieAlgebra& g, const std::vector<Vec>& letters, const std::vector<Vec>& vectors);

}  // namespace lietemper
