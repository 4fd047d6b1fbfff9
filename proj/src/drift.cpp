#include "edalab/drift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edalab/stats.hpp"

namespace edalab {

namespace {

double eval_h(const std::function<double(double)>& h, double x) {
  const double v = h(x);
  if (!(v > 0.0))
    throw std::domain_error("variable_bound: h must be positive on [1, X0]");
  return v;
}

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth, double& err) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(g, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, err) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, err);
}

ChainValidation summarize(std::string name, std::string theorem, double bound,
                          BoundKind kind, const std::vector<double>& times) {
  ChainValidation v;
  v.name = std::move(name);
  v.theorem = std::move(theorem);
  v.bound = bound;
  v.kind = kind;
  const double z99 = normal_quantile(0.99);
  v.empirical_mean = mean(times);
  v.ci99_half = z99 * sample_stddev(times) / std::sqrt(double(times.size()));
  v.pass = (kind == BoundKind::upper)
               ? v.empirical_mean <= bound + v.ci99_half
               : v.empirical_mean >= bound - v.ci99_half;
  return v;
}

}  // namespace

double additive_bound(double x0, double delta, BoundKind) {
  if (!(x0 >= 0.0))
    throw std::invalid_argument("additive_bound: X0 must be >= 0");
  if (!(delta > 0.0))
    throw std::invalid_argument("additive_bound: delta must be > 0");
  return x0 / delta;
}

double multiplicative_bound(double x0, double delta) {
  if (!(x0 >= 1.0))
    throw std::invalid_argument("multiplicative_bound: X0 must be >= 1");
  if (!(delta > 0.0))
    throw std::invalid_argument("multiplicative_bound: delta must be > 0");
  return (1.0 + std::log(x0)) / delta;
}

QuadratureResult variable_bound(double x0,
                                const std::function<double(double)>& h,
                                double quadrature_tol) {
  if (!(x0 >= 1.0))
    throw std::invalid_argument("variable_bound: X0 must be >= 1");
  if (!(quadrature_tol > 0.0))
    throw std::invalid_argument("variable_bound: tolerance must be > 0");
  QuadratureResult res;
  const double head = 1.0 / eval_h(h, 1.0);
  if (x0 == 1.0) {
    res.value = head;
    return res;
  }
  const auto g = [&](double x) { return 1.0 / eval_h(h, x); };
  const double a = 1.0, b = x0;
  const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double err = 0.0;
  const double integral =
      adaptive_simpson(g, a, b, fa, fm, fb, whole, quadrature_tol, 48, err);
  res.value = head + integral;
  res.error = err;
  return res;
}

DriftEstimate empirical_drift(const std::vector<std::vector<double>>& traces,
                              std::span<const double> bin_edges,
                              std::size_t min_count) {
  if (traces.empty())
    throw std::invalid_argument("empirical_drift: need at least one trace");
  if (bin_edges.size() < 2)
    throw std::invalid_argument("empirical_drift: need at least two bin edges");
  for (std::size_t k = 0; k + 1 < bin_edges.size(); ++k)
    if (!(bin_edges[k] < bin_edges[k + 1]))
      throw std::invalid_argument("empirical_drift: edges must be increasing");

  const std::size_t nbins = bin_edges.size() - 1;
  std::vector<double> sum(nbins, 0.0), sumsq(nbins, 0.0), sumx(nbins, 0.0);
  std::vector<std::size_t> count(nbins, 0);
  for (const auto& tr : traces) {
    for (std::size_t t = 0; t + 1 < tr.size(); ++t) {
      const double x = tr[t];
      if (x < bin_edges.front() || x >= bin_edges.back()) continue;
      const auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), x);
      const auto k = static_cast<std::size_t>(it - bin_edges.begin()) - 1;
      const double d = tr[t] - tr[t + 1];
      sum[k] += d;
      sumsq[k] += d * d;
      sumx[k] += x;
      ++count[k];
    }
  }
  DriftEstimate est;
  est.bins.resize(nbins);
  for (std::size_t k = 0; k < nbins; ++k) {
    DriftBin& b = est.bins[k];
    b.lo = bin_edges[k];
    b.hi = bin_edges[k + 1];
    b.count = count[k];
    b.has_estimate = count[k] >= std::max<std::size_t>(min_count, 2);
    if (count[k] > 0) b.mean_x = sumx[k] / double(count[k]);
    if (b.has_estimate) {
      const double c = double(count[k]);
      b.mean = sum[k] / c;
      const double var = std::max(0.0, (sumsq[k] - sum[k] * sum[k] / c) / (c - 1.0));
      b.stderr_ = std::sqrt(var / c);
    }
  }
  return est;
}

ChainValidation validate_additive_walk(std::uint64_t runs, std::uint64_t seed) {
  std::vector<double> times;
  times.reserve(runs);
  for (std::uint64_t r = 0; r < runs; ++r) {
    RngStream rng = derive_stream(seed, {r});
    int x = 10;
    std::uint64_t t = 0;
    while (x > 0) {
      x += rng.bernoulli(0.75) ? -1 : 1;
      x = std::min(x, 20);
      ++t;
    }
    times.push_back(double(t));
  }
  return summarize("biased_walk", "additive drift",
                   additive_bound(10.0, 0.5, BoundKind::upper),
                   BoundKind::upper, times);
}

ChainValidation validate_multiplicative_thinning(std::uint64_t runs,
                                                 std::uint64_t seed) {
  std::vector<double> times;
  times.reserve(runs);
  for (std::uint64_t r = 0; r < runs; ++r) {
    RngStream rng = derive_stream(seed, {r});
    int x = 64;
    std::uint64_t t = 0;
    while (x >= 1) {
      int keep = 0;
      for (int i = 0; i < x; ++i) keep += rng.bernoulli(0.9);
      x = keep;
      ++t;
    }
    times.push_back(double(t));
  }
  return summarize("binomial_thinning", "multiplicative drift",
                   multiplicative_bound(64.0, 0.1), BoundKind::upper, times);
}

ChainValidation validate_variable_sqrt(std::uint64_t runs, std::uint64_t seed) {
  const auto h = [](double x) {
    return x < 4.0 ? x - 0.25 * std::pow(x, 1.5) : std::sqrt(x);
  };
  const double bound = variable_bound(100.0, h, 1e-9).value;
  std::vector<double> times;
  times.reserve(runs);
  for (std::uint64_t r = 0; r < runs; ++r) {
    RngStream rng = derive_stream(seed, {r});
    double x = 100.0;
    std::uint64_t t = 0;
    while (x >= 1.0) {
      const double drop = 2.0 * std::sqrt(x) * rng.next_double();
      x = std::max(0.0, x - drop);
      ++t;
    }
    times.push_back(double(t));
  }
  return summarize("sqrt_decay", "variable drift", bound, BoundKind::upper,
                   times);
}

}  // namespace edalab
