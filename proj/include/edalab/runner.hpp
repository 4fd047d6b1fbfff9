#pragma once

#include <cstdint>
#include <vector>

#include "edalab/eda.hpp"
#include "edalab/fitness.hpp"

namespace edalab {

struct StopCondition {
  std::uint64_t max_evaluations = 0;
};

/// 5000 * n * ln(n+1) * lambda evaluations; comfortably above every
/// in-scope expected runtime at desk scale.
std::uint64_t default_budget(const EdaConfig& cfg);

struct TracePoint {
  std::uint64_t generation = 0;
  double potential = 0.0;  // P_t, the sum of all frequencies
  bool operator==(const TracePoint&) const = default;
};

struct FrequencySnapshot {
  std::uint64_t generation = 0;
  std::vector<double> freqs;
  bool operator==(const FrequencySnapshot&) const = default;
};

/// First-hitting-time measurement plus instrumentation. The runtime
/// convention counts individual fitness evaluations: a hit inside a
/// generation is recorded at the exact sample index, and the samples after
/// it are not charged. Border and absorption counters cover completed,
/// non-hitting generations.
struct RunResult {
  bool hit = false;
  bool unreachable = false;  // borderless: optimum became unsampleable
  std::uint64_t evaluations_to_hit = 0;  // valid iff hit
  std::uint64_t evaluations = 0;         // total evaluations charged
  std::uint64_t generations = 0;         // generations started
  std::uint64_t lower_border_hits = 0;
  std::uint64_t zero_absorptions = 0;
  std::vector<TracePoint> potential_trace;
  std::vector<FrequencySnapshot> trajectory;
  bool operator==(const RunResult&) const = default;
};

/// Executes one optimization run. Deterministic function of its arguments:
/// the EDA consumes the stream derived from (seed, 0), the fitness
/// (target materialization and noise) the stream derived from (seed, 1).
/// Budget exhaustion is a normal outcome, not an error. Under noise, hit
/// detection applies to the true bit string, never the noisy value.
RunResult run(const EdaConfig& cfg, const FitnessSpec& fitness,
              StopCondition stop, std::uint64_t seed);

/// As run, additionally recording P_t and a full frequency snapshot at
/// generation 0 and after every probe_every-th completed generation.
/// Recording consumes no RNG draws, so traced and untraced runs with the
/// same seed agree on every other field.
RunResult trace(const EdaConfig& cfg, const FitnessSpec& fitness,
                StopCondition stop, std::uint64_t seed,
                std::uint64_t probe_every);

}  // namespace edalab
