#pragma once

#include <cstdint>
#include <random>

namespace tempex {

/// The project's one generator: 64-bit Mersenne Twister. Every seeded
/// stream (colourings, hash-family sampling, instance generators) is drawn
/// from it through the helpers below, so a seed fixes the output within
/// this implementation.
using Rng = std::mt19937_64;

/// SplitMix64 finaliser; used to derive independent sub-stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of sub-stream `stream` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

/// Uniform integer in [0, bound) by multiply-shift; bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<Wide>(rng()) * bound) >> 64);
}

/// True with probability p, using the top 53 bits of one draw.
inline bool bernoulli(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace tempex
