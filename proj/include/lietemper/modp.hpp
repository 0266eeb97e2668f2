#pragma once

#include <cstdint>
#include <vector>

#include "lietemper/rational.hpp"

namespace lietemper::modp {

// Arithmetic in GF(2^61 - 1). Ranks computed here are lower bounds for
// ranks over Q of the matrices they reduce.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

using Elem = std::uint64_t;
using ModVec = std::vector<Elem>;

inline Elem reduce(unsigned __int128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}
inline Elem add(Elem a, Elem b) {
  Elem s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline Elem sub(Elem a, Elem b) { return a >= b ? a - b : a + kPrime - b; }
inline Elem mul(Elem a, Elem b) { return reduce(static_cast<unsigned __int128>(a) * b); }
Elem pow(Elem a, std::uint64_t e);
inline Elem inv(Elem a) { return pow(a, kPrime - 2); }

/// Image of a rational; throws Internal if the denominator vanishes mod p.
Elem from_rat(const Rat& q);
ModVec from_vec(const Vec& v);

/// Dense square matrix mod p, row-major.
struct ModMatrix {
  std::size_t n = 0;
  std::vector<Elem> data;
  ModVec apply(const ModVec& v) const;
};
ModMatrix from_matrix(const Matrix& m);

std::size_t rank(std::vector<ModVec> rows);

}  // namespace lietemper::modp
