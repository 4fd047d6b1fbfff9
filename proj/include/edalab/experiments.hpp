#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "edalab/drift.hpp"
#include "edalab/runner.hpp"
#include "edalab/stats.hpp"

namespace edalab {

/// Worker-thread count resolution: explicit value if > 0, else the
/// EDA_LAB_THREADS environment variable, else hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(0..count-1) on up to `threads` workers. Results must be written
/// to index-addressed slots; completion order is irrelevant downstream.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

struct GridPoint {
  EdaConfig cfg;
  FitnessSpec fitness;
};

/// Batch protocol: every grid point is run with `replicates` seeds derived
/// as derive_seed(master_seed, {grid_index, replicate_index}).
/// max_evaluations = 0 means the per-point default budget.
struct SweepProtocol {
  std::vector<GridPoint> grid;
  int replicates = 1;
  std::uint64_t master_seed = 1;
  std::uint64_t max_evaluations = 0;
};

/// Order-independent aggregation of one grid point's replicates. Runtime
/// statistics cover hitting runs only; unsuccessful runs contribute to
/// success_rate but are never imputed.
struct RunStatsCore {
  int runs = 0;
  int hits = 0;
  double success_rate = 0.0;
  bool has_stats = false;  // hits > 0
  double mean_evals = 0.0;
  double mean_evals_ci95 = 0.0;
  double median_evals = 0.0;
  double median_lo95 = 0.0;
  double median_hi95 = 0.0;
  double std_evals = 0.0;
  double mean_border_hits = 0.0;  // over all runs
  double border_ci95 = 0.0;
};

RunStatsCore aggregate_runs(std::span<const RunResult> results);

struct PointStats {
  GridPoint point;
  RunStatsCore stats;
};

std::vector<PointStats> sweep(const SweepProtocol& protocol, int threads);

/// Smallest grid lambda whose mean lower-border hits fall to or below the
/// threshold, with the bracketing grid interval.
struct PhaseTransition {
  bool crossed = false;
  double lambda_star = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

PhaseTransition phase_transition(std::span<const double> lambdas,
                                 std::span<const double> mean_border_hits,
                                 double threshold);
PhaseTransition phase_transition(std::span<const PointStats> sweep_output,
                                 double threshold);

/// Runtime-scaling experiment: the parameter rule maps n to a full grid
/// point; the report fits log(median evaluations) against log n.
struct ScalingPoint {
  int n = 0;
  PointStats stats;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  LogLogFit fit;
  bool budget_limited = false;  // some n had success rate < 0.95
};

ScalingReport scaling_fit(const std::function<GridPoint(int)>& rule,
                          std::span<const int> ns, int replicates,
                          std::uint64_t master_seed, int threads,
                          std::uint64_t max_evaluations = 0);

/// Standard (1+1) EA baseline: flip each bit independently with probability
/// c/n, accept iff the (possibly noisy) offspring fitness is not worse than
/// the stored parent fitness. Hitting-time semantics match run(): every
/// sampled point, including the initial one, is checked against the true
/// optimum at its exact evaluation index.
RunResult ea_run(const FitnessSpec& fitness, int n, double c,
                 StopCondition stop, std::uint64_t seed);

RunStatsCore ea_baseline(const FitnessSpec& fitness, int n, double c,
                         int replicates, std::uint64_t master_seed,
                         std::uint64_t max_evaluations, int threads);

/// Comparison suite: one series per (algorithm rule, fitness), each swept
/// over the same n grid; emits per-cell statistics plus fitted slopes.
struct CompareEntry {
  std::string label;
  std::function<EdaConfig(int)> config_rule;
};

struct CompareCell {
  std::string label;
  std::string fitness;
  int n = 0;
  RunStatsCore stats;
};

struct CompareSeries {
  std::string label;
  std::string fitness;
  LogLogFit fit;
  bool budget_limited = false;
};

struct CompareReport {
  std::vector<CompareCell> cells;
  std::vector<CompareSeries> series;
};

CompareReport compare(std::span<const CompareEntry> entries,
                      std::span<const FitnessSpec> fitnesses,
                      std::span<const int> ns, int replicates,
                      std::uint64_t master_seed, int threads,
                      std::uint64_t max_evaluations = 0);

/// Noise study: per noise level, EDA statistics under the level's config
/// rule plus the (1+1) EA baseline on the same noisy fitness and budget.
struct NoiseLevelRow {
  double noise_param = 0.0;
  GridPoint eda_point;
  RunStatsCore eda;
  RunStatsCore ea;
};

std::vector<NoiseLevelRow> noise_study(
    std::span<const double> noise_params,
    const std::function<GridPoint(double)>& eda_rule, double ea_c,
    int replicates, std::uint64_t master_seed, std::uint64_t max_evaluations,
    int threads);

// Named parameter rules shared by the scaling/compare/noise protocols.

/// cGA with K = ceil(coeff * sqrt(n) * ln n).
EdaConfig cga_sqrt_rule(int n, double coeff);

/// cGA with K = ceil(coeff * (1 + sigma2) * sqrt(n) * ln n).
EdaConfig cga_noise_rule(int n, double coeff, double sigma2);

/// UMDA with lambda = ceil(lambda_coeff * ln n), mu = ceil(mu_coeff * ln n).
EdaConfig umda_log_rule(int n, double lambda_coeff, double mu_coeff);

/// UMDA with lambda = round(ceil(sqrt n) * ln n), mu = max(1, lambda / 2).
EdaConfig umda_sqrtlog_rule(int n);

/// Empirical one-step drift of single frequencies, binned by the potential
/// X = 1 - p so that positive drift means frequency gain. correlation is the
/// Pearson coefficient between bin drift and sqrt(x (1 - x)) over qualifying
/// bins; intensity is the through-origin fit of drift = (I / sqrt n) *
/// sqrt(x (1 - x)).
struct DriftShape {
  DriftEstimate estimate;
  double correlation = 0.0;
  double intensity = 0.0;
  std::size_t qualifying_bins = 0;
};

DriftShape frequency_drift_shape(const EdaConfig& cfg,
                                 const FitnessSpec& fitness, int replicates,
                                 std::uint64_t master_seed, int bins,
                                 std::size_t min_count, int threads);

}  // namespace edalab
