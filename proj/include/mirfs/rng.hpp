#pragma once

#include <cstdint>
#include <random>

namespace mirfs {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derives an independent RNG stream from (seed_base, stream_id).
/// Streams are counter-based so replications scheduled on different
/// workers draw exactly the same numbers as a serial run.
inline Rng make_stream(std::uint64_t seed_base, std::uint64_t stream_id) {
  std::uint64_t s = splitmix64(seed_base ^ splitmix64(stream_id + 1));
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(stream_id), 0x8f1bbcdcu};
  return Rng(seq);
}

}  // namespace mirfs
