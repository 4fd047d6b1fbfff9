#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edalab/rng.hpp"

namespace edalab {

using Bit = std::uint8_t;

/// Fixed-length binary solution vector; every element is 0 or 1.
using BitString = std::vector<Bit>;

using BigInt = boost::multiprecision::cpp_int;

/// Fitness value: an exact integer part plus a real offset (additive noise).
/// The integer part stays exact at any width, so functions with
/// exponentially scaled weights order the hypercube correctly.
struct Score {
  BigInt base;
  double offset = 0.0;

  Score() = default;
  explicit Score(long long v) : base(v) {}
  explicit Score(BigInt v) : base(std::move(v)) {}

  double to_double() const { return base.convert_to<double>() + offset; }

  /// Exact three-way comparison of base + offset as extended reals.
  friend int compare(const Score& a, const Score& b) {
    const int c = a.base.compare(b.base);
    if (c == 0) {
      if (a.offset < b.offset) return -1;
      if (a.offset > b.offset) return 1;
      return 0;
    }
    const double delta = BigInt(b.base - a.base).convert_to<double>();
    const double noise = a.offset - b.offset;
    if (delta > noise) return -1;
    if (delta < noise) return 1;
    return 0;
  }
  friend bool operator<(const Score& a, const Score& b) { return compare(a, b) < 0; }
  friend bool operator>(const Score& a, const Score& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Score& a, const Score& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Score& a, const Score& b) { return compare(a, b) >= 0; }
  friend bool operator==(const Score& a, const Score& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Score& a, const Score& b) { return compare(a, b) != 0; }
};

/// max{m, min{1 - m, v}} for a margin m in (0, 1/2]. Idempotent.
double clamp_frequency(double v, double m);

/// The probabilistic model: per-position probability of sampling a 1.
/// With a margin m every entry lies in [m, 1-m]; without one ("borderless")
/// entries may reach 0 and 1 and stay absorbed there.
struct FrequencyVector {
  std::vector<double> p;
  std::optional<double> margin;

  static FrequencyVector uniform(int n, std::optional<double> margin);

  int size() const { return static_cast<int>(p.size()); }

  /// Samples one bit string: bit i is 1 with probability p[i]. Consumes
  /// exactly n draws from rng, in index order.
  BitString sample(RngStream& rng) const;

  void clamp_all();

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

/// One generation's sampled offspring with their fitness values.
/// Duplicates are permitted.
struct ScoredPopulation {
  std::vector<BitString> members;
  std::vector<Score> scores;

  std::size_t size() const { return members.size(); }
  void resize(std::size_t lambda, std::size_t n);
};

/// Returns indices of the mu best members, fitness-descending; position k
/// of the result is x^(k+1). Equal-fitness runs are permuted uniformly at
/// random (Fisher-Yates per tie group, best group first), so the draw order
/// is a deterministic function of the scored population. Throws if
/// mu is 0 or exceeds the population size.
std::vector<std::size_t> select_best(const ScoredPopulation& pop,
                                     std::size_t mu, RngStream& rng);

std::string to_string(const BitString& x);
BitString parse_bitstring(const std::string& s);

}  // namespace edalab
