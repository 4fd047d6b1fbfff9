#include "edalab/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace edalab {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EDA_LAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RunStatsCore aggregate_runs(std::span<const RunResult> results) {
  RunStatsCore s;
  s.runs = static_cast<int>(results.size());
  std::vector<double> evals;
  std::vector<double> border;
  border.reserve(results.size());
  for (const RunResult& r : results) {
    if (r.hit) evals.push_back(static_cast<double>(r.evaluations_to_hit));
    border.push_back(static_cast<double>(r.lower_border_hits));
  }
  s.hits = static_cast<int>(evals.size());
  s.success_rate = s.runs > 0 ? double(s.hits) / double(s.runs) : 0.0;
  s.has_stats = s.hits > 0;
  if (s.has_stats) {
    s.mean_evals = mean(evals);
    s.median_evals = median(evals);
    if (s.hits >= 2) {
      s.std_evals = sample_stddev(evals);
      s.mean_evals_ci95 = mean_ci(evals, 0.95).half_width;
      const MedianCi mc = median_ci(evals, 0.95);
      s.median_lo95 = mc.lo;
      s.median_hi95 = mc.hi;
    } else {
      s.median_lo95 = s.median_hi95 = s.median_evals;
    }
  }
  if (!border.empty()) {
    s.mean_border_hits = mean(border);
    if (border.size() >= 2) s.border_ci95 = mean_ci(border, 0.95).half_width;
  }
  return s;
}

std::vector<PointStats> sweep(const SweepProtocol& protocol, int threads) {
  if (protocol.grid.empty())
    throw std::invalid_argument("sweep: grid must be non-empty");
  if (protocol.replicates < 1)
    throw std::invalid_argument("sweep: replicates must be >= 1");
  for (const GridPoint& g : protocol.grid) {
    g.cfg.validate();
    g.fitness.validate(g.cfg.n);
  }
  const auto reps = static_cast<std::size_t>(protocol.replicates);
  std::vector<RunResult> results(protocol.grid.size() * reps);
  parallel_for(results.size(), resolve_threads(threads), [&](std::size_t t) {
    const std::size_t g = t / reps;
    const std::size_t r = t % reps;
    const GridPoint& point = protocol.grid[g];
    const std::uint64_t seed = derive_seed(protocol.master_seed, {g, r});
    const std::uint64_t budget = protocol.max_evaluations > 0
                                     ? protocol.max_evaluations
                                     : default_budget(point.cfg);
    results[t] = run(point.cfg, point.fitness, {budget}, seed);
  });
  std::vector<PointStats> out;
  out.reserve(protocol.grid.size());
  for (std::size_t g = 0; g < protocol.grid.size(); ++g) {
    PointStats ps;
    ps.point = protocol.grid[g];
    ps.stats = aggregate_runs(
        std::span<const RunResult>(results.data() + g * reps, reps));
    out.push_back(std::move(ps));
  }
  return out;
}

PhaseTransition phase_transition(std::span<const double> lambdas,
                                 std::span<const double> mean_border_hits,
                                 double threshold) {
  if (lambdas.size() != mean_border_hits.size() || lambdas.empty())
    throw std::invalid_argument("phase_transition: bad input");
  PhaseTransition pt;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (mean_border_hits[i] <= threshold) {
      pt.crossed = true;
      pt.lambda_star = lambdas[i];
      pt.bracket_lo = i > 0 ? lambdas[i - 1] : lambdas[i];
      pt.bracket_hi = lambdas[i];
      return pt;
    }
  }
  return pt;
}

PhaseTransition phase_transition(std::span<const PointStats> sweep_output,
                                 double threshold) {
  std::vector<double> lambdas, hits;
  for (const PointStats& p : sweep_output) {
    lambdas.push_back(static_cast<double>(p.point.cfg.lambda));
    hits.push_back(p.stats.mean_border_hits);
  }
  return phase_transition(lambdas, hits, threshold);
}

ScalingReport scaling_fit(const std::function<GridPoint(int)>& rule,
                          std::span<const int> ns, int replicates,
                          std::uint64_t master_seed, int threads,
                          std::uint64_t max_evaluations) {
  if (ns.size() < 4)
    throw std::invalid_argument("scaling_fit: need at least 4 problem sizes");
  SweepProtocol protocol;
  for (int n : ns) protocol.grid.push_back(rule(n));
  protocol.replicates = replicates;
  protocol.master_seed = master_seed;
  protocol.max_evaluations = max_evaluations;
  const auto stats = sweep(protocol, threads);
  ScalingReport report;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    report.points.push_back({ns[i], stats[i]});
    if (stats[i].stats.success_rate < 0.95) report.budget_limited = true;
    if (stats[i].stats.has_stats) {
      xs.push_back(static_cast<double>(ns[i]));
      ys.push_back(stats[i].stats.median_evals);
    }
  }
  if (xs.size() >= 4) report.fit = loglog_slope(xs, ys);
  return report;
}

RunResult ea_run(const FitnessSpec& fitness, int n, double c,
                 StopCondition stop, std::uint64_t seed) {
  if (!(c > 0.0)) throw std::invalid_argument("ea_run: c must be > 0");
  if (n < 1) throw std::invalid_argument("ea_run: n must be >= 1");
  RngStream rng = derive_stream(seed, {0});
  RngStream fit_rng = derive_stream(seed, {1});
  FitnessPtr f = make_fitness(fitness, n, fit_rng);
  const double p = std::min(1.0, c / static_cast<double>(n));

  RunResult res;
  BitString x(static_cast<std::size_t>(n));
  for (auto& b : x) b = static_cast<Bit>(rng.bernoulli(0.5));
  res.evaluations = 1;
  Score fx = f->evaluate(x);
  if (f->is_optimum(x)) {
    res.hit = true;
    res.evaluations_to_hit = 1;
    return res;
  }
  BitString y(static_cast<std::size_t>(n));
  while (res.evaluations < stop.max_evaluations) {
    ++res.generations;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool flip = rng.bernoulli(p);
      y[i] = static_cast<Bit>(x[i] ^ static_cast<Bit>(flip));
    }
    Score fy = f->evaluate(y);
    ++res.evaluations;
    if (f->is_optimum(y)) {
      res.hit = true;
      res.evaluations_to_hit = res.evaluations;
      return res;
    }
    if (fy >= fx) {
      std::swap(x, y);
      fx = std::move(fy);
    }
  }
  return res;
}

RunStatsCore ea_baseline(const FitnessSpec& fitness, int n, double c,
                         int replicates, std::uint64_t master_seed,
                         std::uint64_t max_evaluations, int threads) {
  std::vector<RunResult> results(static_cast<std::size_t>(replicates));
  parallel_for(results.size(), resolve_threads(threads), [&](std::size_t r) {
    const std::uint64_t seed = derive_seed(master_seed, {0, r});
    results[r] = ea_run(fitness, n, c, {max_evaluations}, seed);
  });
  return aggregate_runs(results);
}

CompareReport compare(std::span<const CompareEntry> entries,
                      std::span<const FitnessSpec> fitnesses,
                      std::span<const int> ns, int replicates,
                      std::uint64_t master_seed, int threads,
                      std::uint64_t max_evaluations) {
  if (entries.empty() || fitnesses.empty() || ns.empty())
    throw std::invalid_argument("compare: empty suite");
  SweepProtocol protocol;
  for (const CompareEntry& e : entries)
    for (const FitnessSpec& fs : fitnesses)
      for (int n : ns) protocol.grid.push_back({e.config_rule(n), fs});
  protocol.replicates = replicates;
  protocol.master_seed = master_seed;
  protocol.max_evaluations = max_evaluations;
  const auto stats = sweep(protocol, threads);

  CompareReport report;
  std::size_t idx = 0;
  for (const CompareEntry& e : entries) {
    for (const FitnessSpec& fs : fitnesses) {
      std::vector<double> xs, ys;
      bool limited = false;
      for (int n : ns) {
        const PointStats& ps = stats[idx++];
        report.cells.push_back({e.label, fs.to_string(), n, ps.stats});
        if (ps.stats.success_rate < 0.95) limited = true;
        if (ps.stats.has_stats) {
          xs.push_back(static_cast<double>(n));
          ys.push_back(ps.stats.median_evals);
        }
      }
      CompareSeries series;
      series.label = e.label;
      series.fitness = fs.to_string();
      series.budget_limited = limited;
      if (xs.size() >= 3) series.fit = loglog_slope(xs, ys);
      report.series.push_back(std::move(series));
    }
  }
  return report;
}

std::vector<NoiseLevelRow> noise_study(
    std::span<const double> noise_params,
    const std::function<GridPoint(double)>& eda_rule, double ea_c,
    int replicates, std::uint64_t master_seed, std::uint64_t max_evaluations,
    int threads) {
  if (noise_params.empty())
    throw std::invalid_argument("noise_study: empty noise grid");
  std::vector<NoiseLevelRow> rows(noise_params.size());
  const std::uint64_t eda_master = derive_seed(master_seed, {0});
  const std::uint64_t ea_master = derive_seed(master_seed, {1});

  SweepProtocol protocol;
  for (double s : noise_params) protocol.grid.push_back(eda_rule(s));
  protocol.replicates = replicates;
  protocol.master_seed = eda_master;
  protocol.max_evaluations = max_evaluations;
  const auto eda_stats = sweep(protocol, threads);

  for (std::size_t i = 0; i < noise_params.size(); ++i) {
    rows[i].noise_param = noise_params[i];
    rows[i].eda_point = protocol.grid[i];
    rows[i].eda = eda_stats[i].stats;
  }
  // EA replicates across all levels run as one task list.
  const auto reps = static_cast<std::size_t>(replicates);
  std::vector<RunResult> ea_results(noise_params.size() * reps);
  parallel_for(ea_results.size(), resolve_threads(threads), [&](std::size_t t) {
    const std::size_t level = t / reps;
    const std::size_t r = t % reps;
    const GridPoint& point = protocol.grid[level];
    const std::uint64_t seed = derive_seed(ea_master, {level, r});
    ea_results[t] = ea_run(point.fitness, point.cfg.n, ea_c,
                           {max_evaluations}, seed);
  });
  for (std::size_t i = 0; i < noise_params.size(); ++i) {
    rows[i].ea = aggregate_runs(std::span<const RunResult>(
        ea_results.data() + i * reps, reps));
  }
  return rows;
}

EdaConfig cga_sqrt_rule(int n, double coeff) {
  const double k =
      std::ceil(coeff * std::sqrt(double(n)) * std::log(double(n)));
  return EdaConfig::cga(n, std::max(1.0, k));
}

EdaConfig cga_noise_rule(int n, double coeff, double sigma2) {
  const double k = std::ceil(coeff * (1.0 + sigma2) * std::sqrt(double(n)) *
                             std::log(double(n)));
  return EdaConfig::cga(n, std::max(1.0, k));
}

EdaConfig umda_log_rule(int n, double lambda_coeff, double mu_coeff) {
  const int lambda = std::max(
      1, static_cast<int>(std::ceil(lambda_coeff * std::log(double(n)))));
  int mu = std::max(
      1, static_cast<int>(std::ceil(mu_coeff * std::log(double(n)))));
  mu = std::min(mu, lambda);
  return EdaConfig::umda(n, lambda, mu);
}

EdaConfig umda_sqrtlog_rule(int n) {
  const int lambda = std::max(
      2, static_cast<int>(std::llround(std::ceil(std::sqrt(double(n))) *
                                       std::log(double(n)))));
  const int mu = std::max(1, lambda / 2);
  return EdaConfig::umda(n, lambda, mu);
}

DriftShape frequency_drift_shape(const EdaConfig& cfg,
                                 const FitnessSpec& fitness, int replicates,
                                 std::uint64_t master_seed, int bins,
                                 std::size_t min_count, int threads) {
  if (bins < 2) throw std::invalid_argument("frequency_drift_shape: bins >= 2");
  std::vector<RunResult> results(static_cast<std::size_t>(replicates));
  parallel_for(results.size(), resolve_threads(threads), [&](std::size_t r) {
    const std::uint64_t seed = derive_seed(master_seed, {0, r});
    results[r] = trace(cfg, fitness, {default_budget(cfg)}, seed, 1);
  });

  std::vector<std::vector<double>> traces;
  const auto n = static_cast<std::size_t>(cfg.n);
  for (const RunResult& r : results) {
    if (r.trajectory.size() < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> tr(r.trajectory.size());
      for (std::size_t t = 0; t < r.trajectory.size(); ++t)
        tr[t] = 1.0 - r.trajectory[t].freqs[i];
      traces.push_back(std::move(tr));
    }
  }
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (std::size_t k = 0; k < edges.size(); ++k)
    edges[k] = static_cast<double>(k) / static_cast<double>(bins);
  // include x == 1 in the last bin
  edges.back() = 1.0 + 1e-12;

  DriftShape shape;
  shape.estimate = empirical_drift(traces, edges, min_count);
  std::vector<double> drift, sigma;
  for (const DriftBin& b : shape.estimate.bins) {
    if (!b.has_estimate || b.count < min_count) continue;
    drift.push_back(b.mean);
    sigma.push_back(std::sqrt(std::max(0.0, b.mean_x * (1.0 - b.mean_x))));
  }
  shape.qualifying_bins = drift.size();
  if (drift.size() >= 3) {
    shape.correlation = pearson_correlation(sigma, drift);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < drift.size(); ++k) {
      num += sigma[k] * drift[k];
      den += sigma[k] * sigma[k];
    }
    if (den > 0.0)
      shape.intensity = std::sqrt(static_cast<double>(cfg.n)) * num / den;
  }
  return shape;
}

}  // namespace edalab
