#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ccmo {

// All randomness flows through this wrapper. The engine is std::mt19937_64,
// whose output sequence is pinned down by the C++ standard, and the bounded
// samplers are hand-rolled because std:: distributions are
// implementation-defined and would break cross-platform replay.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [lo, hi], inclusive. Rejection sampling: draws below
  // 2^64 mod range are discarded.
  std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return next_u64();  // full 64-bit range
    const std::uint64_t reject_below = (0 - range) % range;
    std::uint64_t x = next_u64();
    while (x < reject_below) x = next_u64();
    return lo + x % range;
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_u64(0, span));
  }

  // Index in [0, n); n must be >= 1.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform_u64(0, static_cast<std::uint64_t>(n) - 1));
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Keyed substream derivation: seed = splitmix walk over (master, fnv1a(role),
// index). Adding roles or indices never perturbs other streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view role, std::uint64_t index) {
  std::uint64_t s = detail::splitmix64(master);
  s = detail::splitmix64(s ^ detail::fnv1a(role));
  s = detail::splitmix64(s ^ index);
  return s;
}

}  // namespace ccmo
