#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string_view>

namespace edalab {

/// splitmix64 finalizer. Used for seed expansion and stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Advances a splitmix64 state and returns the next output.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += kGolden;
  return mix64(state);
}

/// Deterministic 64-bit random stream: xoshiro256** with splitmix64 seed
/// expansion. Identical seeds yield identical draw sequences on every
/// platform and in every build mode; the draw primitives below are the
/// complete, documented surface (see README for the exact definitions and
/// the golden vectors).
class RngStream {
 public:
  static constexpr std::string_view kAlgorithm =
      "xoshiro256** 1.0, seeded via splitmix64";

  explicit RngStream(std::uint64_t seed) noexcept {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution: (u >> 11) * 2^-53.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double next_double_open() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// One draw; true with probability p.
  bool bernoulli(double p) noexcept { return next_double() < p; }

  /// Unbiased integer in [0, bound) via rejection sampling; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Standard normal via Box-Muller; consumes exactly two draws.
  double next_gaussian() noexcept {
    const double u1 = next_double_open();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

/// Derives a child seed from a master seed and an index tuple:
///   s = master; for each index i: s = mix64((s + kGolden) ^ mix64(i + kGolden))
/// Pure function of its arguments; distinct tuples give statistically
/// independent streams.
std::uint64_t derive_seed(std::uint64_t master,
                          std::span<const std::uint64_t> indices) noexcept;

inline std::uint64_t derive_seed(
    std::uint64_t master, std::initializer_list<std::uint64_t> indices) noexcept {
  return derive_seed(master, std::span<const std::uint64_t>(indices.begin(),
                                                            indices.size()));
}

inline RngStream derive_stream(std::uint64_t master,
                               std::initializer_list<std::uint64_t> indices) noexcept {
  return RngStream(derive_seed(master, indices));
}

}  // namespace edalab
