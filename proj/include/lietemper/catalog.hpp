#pragma once

#include <string>
#include <vector>

#include "lietemper/geometry.hpp"

namespace lietemper {

/// A catalog algebra with its designated Cartan data.
struct AlgebraBlock {
  LieAlgebraPtr algebra;
  std::vector<Vec> split_torus;     // maximal split torus a_g
  std::vector<Vec> compact_cartan;  // t_c, so that a_g + t_c is a Cartan subalgebra
  std::size_t defining_size = 0;    // n for the defining n x n (or realified 2n x 2n) matrices
  bool realified = false;           // matrices are [[Re, -Im], [Im, Re]] blocks
  bool simple_token = true;         // false for direct sums
};

/// Tokens: sl<n>, so<p>_<q>, su<p>_<q>, sp<n>, slc<n>, soc<n>, spc<n>, joined by '+'.
/// Throws UnsupportedParams outside the supported ranges.
AlgebraBlock build_algebra(const std::string& token);

struct FamilyInfo {
  std::string id;
  std::string schema;   // parameter syntax after "id:"
  std::string summary;
  std::string example;  // a complete family spec
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo* find_family(const std::string& id);

/// "family:param:..." -> validated pair. Throws UnsupportedParams.
Pair construct(const std::string& spec);

}  // namespace lietemper
