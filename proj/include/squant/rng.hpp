#pragma once

#include <cstdint>
#include <random>

namespace squant {

/// splitmix64 step; used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic per-stream generator: (seed, stream) -> mt19937_64. Streams
/// are independent by counter, so adding streams never perturbs earlier draws.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
  const std::uint64_t a = splitmix64(s);
  const std::uint64_t b = splitmix64(s);
  return std::mt19937_64(a ^ (b << 1));
}

}  // namespace squant
