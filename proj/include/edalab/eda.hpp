#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edalab/core.hpp"
#include "edalab/fitness.hpp"
#include "edalab/rng.hpp"

namespace edalab {

enum class Algorithm { umda, pbil, mmas_ib, cga, sig_cga };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

/// Full parameterization of one n-Bernoulli-lambda EDA instance. Fields that
/// do not apply to the chosen algorithm are ignored; validate() enforces the
/// per-algorithm requirements. margin == nullopt means borderless mode.
struct EdaConfig {
  Algorithm algorithm = Algorithm::umda;
  int n = 0;
  int lambda = 0;
  int mu = 0;            // umda, pbil
  double rho = 0.0;      // pbil, mmas_ib
  double K = 0.0;        // cga
  double epsilon = 0.0;  // sig_cga
  std::optional<double> margin;

  static EdaConfig umda(int n, int lambda, int mu);
  static EdaConfig pbil(int n, int lambda, int mu, double rho);
  static EdaConfig mmas_ib(int n, int lambda, double rho);
  static EdaConfig cga(int n, double K);
  static EdaConfig sig_cga(int n, double epsilon);

  EdaConfig without_borders() const;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

/// Per-position winner-bit history for sig-cGA, stored as 64-bit blocks of
/// one-counts plus sliding one-counts over the power-of-two windows
/// 64 * 2^j. Push is O(1) amortized; the raw bits are never needed because
/// significance is evaluated on whole blocks only.
class SigHistory {
 public:
  SigHistory() = default;
  explicit SigHistory(int levels);

  void push(bool one);
  void reset();

  /// True right after a 64-bit block completed; significance checks happen
  /// only at these boundaries.
  bool at_block_boundary() const { return boundary_; }

  int levels() const { return levels_; }
  std::uint64_t completed_blocks() const { return total_blocks_; }
  std::uint64_t available_blocks() const;
  std::uint64_t window_bits(int j) const { return 64ull << j; }
  std::uint32_t window_ones(int j) const { return win_[static_cast<std::size_t>(j)]; }

 private:
  void complete_block(std::uint32_t count);

  std::uint32_t tail_len_ = 0;
  std::uint32_t tail_ones_ = 0;
  bool boundary_ = false;
  std::uint32_t head_ = 0;
  std::uint64_t total_blocks_ = 0;
  int levels_ = 0;
  std::uint32_t cap_blocks_ = 0;
  std::vector<std::uint8_t> blocks_;
  std::vector<std::uint32_t> win_;
};

/// Number of window levels used by sig-cGA histories for problem size n and
/// significance parameter epsilon (largest window >= 8 * eps * n * ln n bits).
int sig_history_levels(int n, double epsilon);

/// Scans full power-of-two windows (smallest first) of a position's history.
/// Returns +1 on a significance of 1s, -1 on a significance of 0s, else 0.
/// The threshold against the expected count ell * p_tilde is
///   max( sqrt(eps * ell * p_tilde * (1 - p_tilde) * ln n), eps * ln n ).
int check_significance(const SigHistory& h, double p_tilde, double epsilon,
                       double ln_n);

/// An algorithm's full mutable state.
struct EdaState {
  FrequencyVector p;
  std::uint64_t generation = 0;
  std::vector<SigHistory> histories;  // sig_cga only

  static EdaState initial(const EdaConfig& cfg);
};

// Update schemes. Pure: all randomness enters through sampling and
// tie-breaking upstream. Margin clamping is a separate pass in eda_step.

/// Each frequency becomes the relative frequency of 1s among the selected.
FrequencyVector umda_update(const FrequencyVector& p,
                            const ScoredPopulation& pop,
                            std::span<const std::size_t> best);

/// Convex combination with learning rate rho; rho = 1 collapses to UMDA.
FrequencyVector pbil_update(const FrequencyVector& p,
                            const ScoredPopulation& pop,
                            std::span<const std::size_t> best, double rho);

/// PBIL restricted to the single best sample (mu = 1).
FrequencyVector mmas_update(const FrequencyVector& p, const BitString& winner,
                            double rho);

/// +-1/K on positions where the two samples differ, then clamped into [0,1].
FrequencyVector cga_update(const FrequencyVector& p, const BitString& better,
                           const BitString& worse, double K);

/// Instrumentation emitted by one generation.
struct StepInfo {
  std::uint32_t lower_border_hits = 0;  // frequency moved onto the margin m from above
  std::uint32_t zero_absorptions = 0;   // borderless: frequency reached exactly 0
  bool absorbed_any = false;            // borderless: frequency reached 0 or 1
};

/// One generation: samples lambda offspring from state.p (filling pop),
/// evaluates them, applies the configured update scheme and the margin
/// clamp, and increments the generation counter. RNG draw order: offspring
/// bits in sample and index order, then selection tie-breaks.
StepInfo eda_step(EdaState& state, const EdaConfig& cfg, Fitness& f,
                  RngStream& rng, ScoredPopulation& pop);

}  // namespace edalab
