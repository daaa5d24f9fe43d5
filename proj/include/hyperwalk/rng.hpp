#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hyperwalk {

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20130712ULL;

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for one trial of a seeded experiment; results do
/// not depend on how trials are distributed across workers.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ULL)));
}

/// Uniform integer in [0, bound) by rejection. Portable across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniformly random size-k subset of {0, ..., n-1}, via a partial
/// Fisher-Yates shuffle; returned in draw order.
std::vector<std::uint64_t> sample_subset(Rng& rng, std::uint64_t n, std::uint64_t k);

}  // namespace hyperwalk
