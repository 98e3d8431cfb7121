#pragma once

// Seedable, splittable randomness: every consumer derives an independent
// mt19937_64 stream from (seed, stream index) via splitmix64, so runs are
// reproducible and sub-streams never overlap by construction.

#include <cstdint>
#include <random>

namespace tvc {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

// uniform in [0,1), 53-bit resolution
inline double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// uniform integer in [lo, hi], rejection sampled (portable across stdlibs)
inline std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

inline bool coin(std::mt19937_64& rng, double p) { return uniform01(rng) < p; }

} // namespace tvc
