#pragma once

#include <cmath>
#include <cstdint>

namespace gpfsched {

// Counter-based random streams. Every draw is a pure function of
// (seed, stream tag, key indices), so values do not depend on the order
// in which slots, UEs, or worker threads ask for them.
namespace rng {

inline constexpr std::uint64_t kPlacementStream = 0x706c6163656d6e74ull;
inline constexpr std::uint64_t kFadingStream = 0x66616465ull;
inline constexpr std::uint64_t kTieStream = 0x746965ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_key(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t k0, std::uint64_t k1 = 0) {
  std::uint64_t h = splitmix64(seed ^ stream);
  h = splitmix64(h ^ k0);
  h = splitmix64(h ^ k1);
  return h;
}

// 53-bit uniform in [0, 1).
inline double uniform01(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Unit-mean exponential via inverse CDF.
inline double exponential(std::uint64_t h) {
  return -std::log1p(-uniform01(h));
}

}  // namespace rng
}  // namespace gpfsched
