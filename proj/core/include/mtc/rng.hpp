// Counter-based randomness: draw k is a pure function of (seed, k), so
// sampling parallelizes with no shared state and replays bit-identically
// at any worker count.

#pragma once

#include <cstdint>

namespace mtc::rng {

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// k-th value of the stream identified by seed.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * kGamma);
}

// Independent child seed for a named substream (protocol runs, bootstrap).
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + kGamma));
}

// Uniform double in [0, 1) from 53 high bits.
constexpr double unit(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

}  // namespace mtc::rng
