#pragma once

#include <cstdint>
#include <random>

namespace expsearch {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for (seed, stream) pairs, e.g. (master seed, trial).
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

// Uniform integer in [0, bound). Implemented here rather than through
// std::uniform_int_distribution so streams are identical across standard
// libraries.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace expsearch
