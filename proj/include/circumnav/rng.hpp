#pragma once

#include <cstdint>
#include <random>

namespace circumnav {

/// Counter-based per-run seed derivation (splitmix64 of master + index), so
/// changing the run count never perturbs earlier runs' streams.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (run_index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the engine's raw 64-bit output. Bit-exact
/// across platforms, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace circumnav
