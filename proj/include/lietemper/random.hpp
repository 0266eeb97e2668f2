#pragma once

#include <cstdint>
#include <random>

#include "lietemper/rational.hpp"

namespace lietemper {

/// Deterministic generator for (seed, stream). Distinct streams are independent
/// so per-task sampling is reproducible regardless of evaluation order.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x6c74u};
  return std::mt19937_64(seq);
}

/// Uniform rational num/den with |num| <= bound, 1 <= den <= bound.
inline Rat random_rat(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  long n = num(rng), d = den(rng);
  Rat q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace lietemper
