#pragma once

#include <cstdint>
#include <random>

namespace dynemb {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed fan-out: every randomized stage draws from derive_seed(master,
// stream, counter) where stream names the stage and counter indexes the
// repeat/job inside it.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t counter) {
  return mix64(master ^ mix64(stream * 0x100000001b3ULL + counter));
}

namespace seed_stream {
inline constexpr std::uint64_t kSplit = 1;
inline constexpr std::uint64_t kEmbed = 2;
inline constexpr std::uint64_t kBcgd = 3;
inline constexpr std::uint64_t kSynth = 4;
}  // namespace seed_stream

inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace dynemb
