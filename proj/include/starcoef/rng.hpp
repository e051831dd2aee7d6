#pragma once

#include <cstdint>
#include <random>

namespace starcoef {

// Deterministic seed spreading. mt19937_64 plus the explicit bit-to-double
// mapping below is pinned by the standard, so sampled values are identical
// across platforms and standard libraries.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x9E3779B97F4A7C15ull));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1).
inline double signed_unit_double(std::mt19937_64& eng) {
  return 2.0 * unit_double(eng) - 1.0;
}

}  // namespace starcoef
