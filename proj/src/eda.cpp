#include "edalab/eda.hpp"

#include <cmath>
#include <stdexcept>

namespace edalab {

namespace {

// Shared convex-combination kernel so that the PBIL(rho=1) == UMDA and
// MMAS_ib == PBIL(mu=1) identities hold bit-exactly.
inline double convex_step(double p, double rho, double target) {
  return (1.0 - rho) * p + rho * target;
}

std::vector<std::uint32_t> count_ones(const ScoredPopulation& pop,
                                      std::span<const std::size_t> best,
                                      std::size_t n) {
  std::vector<std::uint32_t> counts(n, 0);
  for (std::size_t idx : best) {
    const Bit* m = pop.members[idx].data();
    for (std::size_t i = 0; i < n; ++i) counts[i] += m[i];
  }
  return counts;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::umda: return "umda";
    case Algorithm::pbil: return "pbil";
    case Algorithm::mmas_ib: return "mmas_ib";
    case Algorithm::cga: return "cga";
    case Algorithm::sig_cga: return "sig_cga";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "umda") return Algorithm::umda;
  if (name == "pbil") return Algorithm::pbil;
  if (name == "mmas_ib") return Algorithm::mmas_ib;
  if (name == "cga") return Algorithm::cga;
  if (name == "sig_cga") return Algorithm::sig_cga;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (umda|pbil|mmas_ib|cga|sig_cga)");
}

EdaConfig EdaConfig::umda(int n, int lambda, int mu) {
  EdaConfig c;
  c.algorithm = Algorithm::umda;
  c.n = n;
  c.lambda = lambda;
  c.mu = mu;
  c.margin = 1.0 / n;
  return c;
}

EdaConfig EdaConfig::pbil(int n, int lambda, int mu, double rho) {
  EdaConfig c = umda(n, lambda, mu);
  c.algorithm = Algorithm::pbil;
  c.rho = rho;
  return c;
}

EdaConfig EdaConfig::mmas_ib(int n, int lambda, double rho) {
  EdaConfig c;
  c.algorithm = Algorithm::mmas_ib;
  c.n = n;
  c.lambda = lambda;
  c.mu = 1;
  c.rho = rho;
  c.margin = 1.0 / n;
  return c;
}

EdaConfig EdaConfig::cga(int n, double K) {
  EdaConfig c;
  c.algorithm = Algorithm::cga;
  c.n = n;
  c.lambda = 2;
  c.K = K;
  c.margin = 1.0 / n;
  return c;
}

EdaConfig EdaConfig::sig_cga(int n, double epsilon) {
  EdaConfig c;
  c.algorithm = Algorithm::sig_cga;
  c.n = n;
  c.lambda = 2;
  c.epsilon = epsilon;
  c.margin = 1.0 / n;
  return c;
}

EdaConfig EdaConfig::without_borders() const {
  EdaConfig c = *this;
  c.margin.reset();
  return c;
}

void EdaConfig::validate() const {
  if (n < 1) throw std::invalid_argument("config error: n must be >= 1");
  if (lambda < 1)
    throw std::invalid_argument("config error: lambda must be >= 1");
  if (margin && !(*margin > 0.0 && *margin <= 0.5))
    throw std::invalid_argument(
        "config error: margin must lie in (0, 1/2] (or be disabled)");
  switch (algorithm) {
    case Algorithm::umda:
      if (mu < 1 || mu > lambda)
        throw std::invalid_argument(
            "config error: umda requires 1 <= mu <= lambda");
      break;
    case Algorithm::pbil:
      if (mu < 1 || mu > lambda)
        throw std::invalid_argument(
            "config error: pbil requires 1 <= mu <= lambda");
      if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("config error: pbil requires rho in (0, 1]");
      break;
    case Algorithm::mmas_ib:
      if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument(
            "config error: mmas_ib requires rho in (0, 1]");
      break;
    case Algorithm::cga:
      if (lambda != 2)
        throw std::invalid_argument("config error: cga uses lambda = 2");
      if (!(K >= 1.0))
        throw std::invalid_argument("config error: cga requires K >= 1");
      break;
    case Algorithm::sig_cga:
      if (lambda != 2)
        throw std::invalid_argument("config error: sig_cga uses lambda = 2");
      if (!(epsilon > 0.0))
        throw std::invalid_argument("config error: sig_cga requires epsilon > 0");
      if (n < 2)
        throw std::invalid_argument("config error: sig_cga requires n >= 2");
      if (!margin || *margin != 1.0 / n)
        throw std::invalid_argument(
            "config error: sig_cga requires the margin 1/n");
      break;
  }
}

SigHistory::SigHistory(int levels)
    : levels_(levels),
      cap_blocks_(1u << (levels - 1)),
      blocks_(1u << (levels - 1)),
      win_(static_cast<std::size_t>(levels), 0) {}

std::uint64_t SigHistory::available_blocks() const {
  return std::min<std::uint64_t>(total_blocks_, cap_blocks_);
}

void SigHistory::push(bool one) {
  tail_ones_ += one;
  if (++tail_len_ == 64) {
    complete_block(tail_ones_);
    tail_len_ = 0;
    tail_ones_ = 0;
    boundary_ = true;
  } else {
    boundary_ = false;
  }
}

void SigHistory::complete_block(std::uint32_t count) {
  for (int j = 0; j < levels_; ++j) {
    const std::uint64_t w_blocks = 1ull << j;
    auto& w = win_[static_cast<std::size_t>(j)];
    if (total_blocks_ >= w_blocks) {
      const std::uint32_t leaving =
          blocks_[(head_ + cap_blocks_ - static_cast<std::uint32_t>(w_blocks)) %
                  cap_blocks_];
      w += count - leaving;
    } else {
      w += count;
    }
  }
  blocks_[head_] = static_cast<std::uint8_t>(count);
  head_ = (head_ + 1) % cap_blocks_;
  ++total_blocks_;
}

void SigHistory::reset() {
  tail_len_ = 0;
  tail_ones_ = 0;
  boundary_ = false;
  head_ = 0;
  total_blocks_ = 0;
  std::fill(win_.begin(), win_.end(), 0u);
}

int sig_history_levels(int n, double epsilon) {
  const double need_bits = 8.0 * epsilon * n * std::log(static_cast<double>(n));
  int levels = 1;
  while ((64.0 * static_cast<double>(1ull << (levels - 1))) < need_bits &&
         levels < 30)
    ++levels;
  return levels;
}

int check_significance(const SigHistory& h, double p_tilde, double epsilon,
                       double ln_n) {
  const std::uint64_t avail = h.available_blocks();
  for (int j = 0; j < h.levels(); ++j) {
    if ((1ull << j) > avail) break;
    const double ell = static_cast<double>(h.window_bits(j));
    const double ones = static_cast<double>(h.window_ones(j));
    const double thr = std::max(
        std::sqrt(epsilon * ell * p_tilde * (1.0 - p_tilde) * ln_n),
        epsilon * ln_n);
    if (ones - ell * p_tilde > thr) return 1;
    if ((ell - ones) - ell * (1.0 - p_tilde) > thr) return -1;
  }
  return 0;
}

EdaState EdaState::initial(const EdaConfig& cfg) {
  cfg.validate();
  EdaState s;
  s.p = FrequencyVector::uniform(cfg.n, cfg.margin);
  if (cfg.algorithm == Algorithm::sig_cga) {
    const int levels = sig_history_levels(cfg.n, cfg.epsilon);
    s.histories.assign(static_cast<std::size_t>(cfg.n), SigHistory(levels));
  }
  return s;
}

FrequencyVector umda_update(const FrequencyVector& p,
                            const ScoredPopulation& pop,
                            std::span<const std::size_t> best) {
  const auto n = p.p.size();
  const auto counts = count_ones(pop, best, n);
  const double mu = static_cast<double>(best.size());
  FrequencyVector out = p;
  for (std::size_t i = 0; i < n; ++i)
    out.p[i] = convex_step(p.p[i], 1.0, static_cast<double>(counts[i]) / mu);
  return out;
}

FrequencyVector pbil_update(const FrequencyVector& p,
                            const ScoredPopulation& pop,
                            std::span<const std::size_t> best, double rho) {
  const auto n = p.p.size();
  const auto counts = count_ones(pop, best, n);
  const double mu = static_cast<double>(best.size());
  FrequencyVector out = p;
  for (std::size_t i = 0; i < n; ++i)
    out.p[i] = convex_step(p.p[i], rho, static_cast<double>(counts[i]) / mu);
  return out;
}

FrequencyVector mmas_update(const FrequencyVector& p, const BitString& winner,
                            double rho) {
  FrequencyVector out = p;
  for (std::size_t i = 0; i < p.p.size(); ++i)
    out.p[i] = convex_step(p.p[i], rho, static_cast<double>(winner[i]) / 1.0);
  return out;
}

FrequencyVector cga_update(const FrequencyVector& p, const BitString& better,
                           const BitString& worse, double K) {
  FrequencyVector out = p;
  for (std::size_t i = 0; i < p.p.size(); ++i) {
    const double step =
        (static_cast<double>(better[i]) - static_cast<double>(worse[i])) / K;
    out.p[i] = std::max(0.0, std::min(1.0, p.p[i] + step));
  }
  return out;
}

StepInfo eda_step(EdaState& state, const EdaConfig& cfg, Fitness& f,
                  RngStream& rng, ScoredPopulation& pop) {
  const auto n = static_cast<std::size_t>(cfg.n);
  const auto lambda = static_cast<std::size_t>(cfg.lambda);
  pop.members.resize(lambda);
  pop.scores.resize(lambda);
  for (std::size_t j = 0; j < lambda; ++j) {
    auto& x = pop.members[j];
    x.resize(n);
    const double* p = state.p.p.data();
    for (std::size_t i = 0; i < n; ++i)
      x[i] = static_cast<Bit>(rng.next_double() < p[i]);
  }
  for (std::size_t j = 0; j < lambda; ++j)
    pop.scores[j] = f.evaluate(pop.members[j]);

  FrequencyVector np;
  switch (cfg.algorithm) {
    case Algorithm::umda: {
      const auto sel = select_best(pop, static_cast<std::size_t>(cfg.mu), rng);
      np = umda_update(state.p, pop, sel);
      break;
    }
    case Algorithm::pbil: {
      const auto sel = select_best(pop, static_cast<std::size_t>(cfg.mu), rng);
      np = pbil_update(state.p, pop, sel, cfg.rho);
      break;
    }
    case Algorithm::mmas_ib: {
      const auto sel = select_best(pop, 1, rng);
      np = mmas_update(state.p, pop.members[sel[0]], cfg.rho);
      break;
    }
    case Algorithm::cga: {
      const auto sel = select_best(pop, 2, rng);
      np = cga_update(state.p, pop.members[sel[0]], pop.members[sel[1]], cfg.K);
      break;
    }
    case Algorithm::sig_cga: {
      const auto sel = select_best(pop, 1, rng);
      const BitString& winner = pop.members[sel[0]];
      const double lo = 1.0 / cfg.n;
      const double hi = 1.0 - 1.0 / cfg.n;
      const double ln_n = std::log(static_cast<double>(cfg.n));
      np = state.p;
      for (std::size_t i = 0; i < n; ++i) {
        auto& h = state.histories[i];
        h.push(winner[i] != 0);
        if (!h.at_block_boundary()) continue;
        const int sig = check_significance(h, state.p.p[i], cfg.epsilon, ln_n);
        if (sig == 1 && np.p[i] != hi) {
          np.p[i] = hi;
          h.reset();
        } else if (sig == -1 && np.p[i] != lo) {
          np.p[i] = lo;
          h.reset();
        }
      }
      break;
    }
  }

  StepInfo info;
  if (cfg.margin) {
    const double m = *cfg.margin;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = clamp_frequency(np.p[i], m);
      info.lower_border_hits += (state.p.p[i] > m && c == m);
      np.p[i] = c;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const bool to_zero = state.p.p[i] > 0.0 && np.p[i] == 0.0;
      const bool to_one = state.p.p[i] < 1.0 && np.p[i] == 1.0;
      info.zero_absorptions += to_zero;
      info.absorbed_any |= to_zero || to_one;
    }
  }
  state.p.p = std::move(np.p);
  ++state.generation;
  return info;
}

}  // namespace edalab
