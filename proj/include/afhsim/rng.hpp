#pragma once

#include <cstdint>

namespace afhsim {

// SplitMix64 finalizer. Bijective on 64-bit words with full avalanche; the
// simulator derives every random quantity from it so that runs are a pure
// function of the configured seeds, independent of platform or libstdc++
// distribution internals.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash2(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a ^ mix64(b));
}

constexpr std::uint64_t hash3(std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) noexcept {
  return mix64(hash2(a, b) ^ mix64(c ^ 0x5851f42d4c957f2dULL));
}

constexpr std::uint64_t hash4(std::uint64_t a, std::uint64_t b,
                              std::uint64_t c, std::uint64_t d) noexcept {
  return mix64(hash3(a, b, c) ^ mix64(d ^ 0x14057b7ef767814fULL));
}

// Maps a 64-bit word to [0, 1) with 53 significant bits.
constexpr double to_unit(std::uint64_t u) noexcept {
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Sequential SplitMix64 stream, used for schedule generation and shuffles.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform draw from [0, bound); bound must be nonzero. Modulo bias is
  // below 2^-58 for the bounds used here (<= 64).
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    return next() % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace afhsim
