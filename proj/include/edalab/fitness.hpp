#pragma once

#include <memory>
#include <string>
#include <vector>

#include "edalab/core.hpp"
#include "edalab/rng.hpp"

namespace edalab {

/// A pseudo-Boolean objective with a unique optimum. Noise-free functions
/// evaluate deterministically; noise wrappers redraw their noise on every
/// call, which is why evaluate() is non-const. is_optimum always judges the
/// true, noise-free optimum.
class Fitness {
 public:
  virtual ~Fitness() = default;
  virtual Score evaluate(const BitString& x) = 0;
  virtual const BitString& optimum() const = 0;
  virtual std::string name() const = 0;
  virtual int n() const = 0;

  bool is_optimum(const BitString& x) const { return x == optimum(); }
};

using FitnessPtr = std::unique_ptr<Fitness>;

/// Declarative description of a fitness function. Random targets and
/// permutations are materialized from an RngStream in make_fitness, so a
/// spec plus a seed fully determines the instance.
struct FitnessSpec {
  enum class Base { onemax, leadingones, binval, needle };
  enum class TargetMode { ones, random, bits };
  enum class PermMode { identity, random };
  enum class NoiseKind { none, gauss, prior };

  Base base = Base::onemax;
  TargetMode target = TargetMode::ones;
  BitString target_bits;  // used when target == bits
  PermMode perm = PermMode::identity;
  NoiseKind noise = NoiseKind::none;
  double noise_param = 0.0;  // sigma (gauss) or flip probability q (prior)

  void validate(int n) const;
  std::string to_string() const;
  static FitnessSpec parse(const std::string& text);
};

/// Materializes a spec. Stream draw order: target bits (n Bernoulli draws,
/// random target only), then the permutation shuffle (random perm only);
/// the remaining stream state drives the noise wrapper, one fresh draw set
/// per evaluation.
FitnessPtr make_fitness(const FitnessSpec& spec, int n, RngStream stream);

/// Noise-free construction with explicit target/permutation. An empty perm
/// means identity; a non-identity perm is only accepted for leadingones.
FitnessPtr make_generalized(FitnessSpec::Base base, BitString target,
                            std::vector<int> perm = {});

FitnessPtr wrap_gaussian_noise(FitnessPtr inner, double sigma, RngStream rng);
FitnessPtr wrap_prior_noise(FitnessPtr inner, double q, RngStream rng);

}  // namespace edalab
