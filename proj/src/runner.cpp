#include "edalab/runner.hpp"

#include <cmath>

namespace edalab {

namespace {

bool optimum_unreachable(const FrequencyVector& p, const BitString& opt) {
  for (std::size_t i = 0; i < p.p.size(); ++i) {
    if ((p.p[i] == 0.0 && opt[i] == 1) || (p.p[i] == 1.0 && opt[i] == 0))
      return true;
  }
  return false;
}

RunResult run_impl(const EdaConfig& cfg, const FitnessSpec& fitness,
                   StopCondition stop, std::uint64_t seed,
                   std::uint64_t probe_every) {
  cfg.validate();
  RngStream eda_rng = derive_stream(seed, {0});
  RngStream fit_rng = derive_stream(seed, {1});
  FitnessPtr f = make_fitness(fitness, cfg.n, fit_rng);

  EdaState state = EdaState::initial(cfg);
  ScoredPopulation pop;
  RunResult res;

  const auto probe = [&] {
    double pt = 0.0;
    for (double v : state.p.p) pt += v;
    res.potential_trace.push_back({state.generation, pt});
    res.trajectory.push_back({state.generation, state.p.p});
  };
  if (probe_every > 0) probe();

  const auto lambda = static_cast<std::uint64_t>(cfg.lambda);
  for (;;) {
    if (res.evaluations >= stop.max_evaluations) break;
    const std::uint64_t before = res.evaluations;
    const std::uint64_t allowed =
        std::min<std::uint64_t>(lambda, stop.max_evaluations - before);
    ++res.generations;
    const StepInfo info = eda_step(state, cfg, *f, eda_rng, pop);

    bool found = false;
    for (std::uint64_t j = 0; j < allowed; ++j) {
      if (f->is_optimum(pop.members[j])) {
        res.hit = true;
        res.evaluations = before + j + 1;
        res.evaluations_to_hit = res.evaluations;
        found = true;
        break;
      }
    }
    if (found) break;
    res.evaluations = before + allowed;
    if (allowed < lambda) break;  // budget exhausted mid-generation

    res.lower_border_hits += info.lower_border_hits;
    res.zero_absorptions += info.zero_absorptions;
    if (!cfg.margin && info.absorbed_any &&
        optimum_unreachable(state.p, f->optimum())) {
      res.unreachable = true;
      break;
    }
    if (probe_every > 0 && state.generation % probe_every == 0) probe();
  }
  return res;
}

}  // namespace

std::uint64_t default_budget(const EdaConfig& cfg) {
  const double b = 5000.0 * cfg.n * std::log(static_cast<double>(cfg.n) + 1.0) *
                   cfg.lambda;
  return static_cast<std::uint64_t>(b);
}

RunResult run(const EdaConfig& cfg, const FitnessSpec& fitness,
              StopCondition stop, std::uint64_t seed) {
  return run_impl(cfg, fitness, stop, seed, 0);
}

RunResult trace(const EdaConfig& cfg, const FitnessSpec& fitness,
                StopCondition stop, std::uint64_t seed,
                std::uint64_t probe_every) {
  if (probe_every < 1)
    throw std::invalid_argument("trace: probe_every must be >= 1");
  return run_impl(cfg, fitness, stop, seed, probe_every);
}

}  // namespace edalab
