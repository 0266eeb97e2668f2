#pragma once

#include <string>

#include "lietemper/geometry.hpp"

namespace lietemper {

/// Parses the line-oriented pair format (grammar in README.md).
/// Throws ParseError or ValidationError; messages start with "<origin>:<line>:".
Pair parse_pair_file(const std::string& text, const std::string& origin = "<text>");
Pair load_pair_file(const std::string& path);

/// Canonical text for a pair; parse_pair_file(serialize_pair(p)) is same_pair to p.
std::string serialize_pair(const Pair& p);

/// Equality of the defining data (names, algebra, subalgebra rows, tori,
/// complexification, notes, expectations).
bool same_pair(const Pair& a, const Pair& b);

}  // namespace lietemper
