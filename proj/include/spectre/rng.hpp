#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace spectre {

/// All seeded randomness runs on std::mt19937_64, whose output sequence is fixed
/// by the C++ standard. Bounded draws use rejection sampling below so results do
/// not depend on a library's distribution implementation.
using Engine = std::mt19937_64;

/// One SplitMix64 step: z += 0x9e3779b97f4a7c15, then
/// z = (z ^ z>>30) * 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; z ^= z>>31.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of trial i under a master seed: mix64(master ^ mix64(i)).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index));
}

/// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = rng();
    if (x >= reject_below) return x % bound;
  }
}

}  // namespace spectre
