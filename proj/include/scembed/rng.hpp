#pragma once

#include <cstdint>
#include <random>

namespace scembed {

/// mt19937_64 output is pinned by the standard, so fixed seeds reproduce
/// bit-identical streams on every platform. The mappings below are hand
/// rolled because std:: distributions are implementation-defined.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform in [0, 1).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform in [0, n). Modulo bias is irrelevant at 64 bits for the n used
/// here; what matters is that the mapping is fixed.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return rng() % n;
}

}  // namespace scembed
