#include "edalab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace edalab {

namespace {

std::vector<double> sorted_copy(std::span<const double> samples) {
  std::vector<double> v(samples.begin(), samples.end());
  std::sort(v.begin(), v.end());
  return v;
}

double sum_sorted(std::span<const double> samples) {
  auto v = sorted_copy(samples);
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

double mean(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("mean: empty sample set");
  return sum_sorted(samples) / static_cast<double>(samples.size());
}

double sample_stddev(std::span<const double> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("sample_stddev: need at least 2 samples");
  const double m = mean(samples);
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - m;
    sq[i] = d * d;
  }
  const double ss = sum_sorted(sq);
  return std::sqrt(ss / static_cast<double>(samples.size() - 1));
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("median: empty sample set");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  if (n % 2 == 1) return samples[n / 2];
  return 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

MeanCi mean_ci(std::span<const double> samples, double level) {
  if (samples.size() < 2)
    throw std::invalid_argument("mean_ci: need at least 2 samples");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("mean_ci: level must lie in (0,1)");
  const double m = mean(samples);
  // population standard deviation: s = sqrt(sum (x - m)^2 / R)
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - m;
    sq[i] = d * d;
  }
  const double s = std::sqrt(sum_sorted(sq) / double(samples.size()));
  const double z = normal_quantile(0.5 + level / 2.0);
  return {m, z * s / std::sqrt(static_cast<double>(samples.size()))};
}

MedianCi median_ci(std::vector<double> samples, double level) {
  if (samples.size() < 2)
    throw std::invalid_argument("median_ci: need at least 2 samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  const double med = (samples.size() % 2 == 1)
                         ? samples[samples.size() / 2]
                         : 0.5 * (samples[samples.size() / 2 - 1] +
                                  samples[samples.size() / 2]);
  const double z = normal_quantile(0.5 + level / 2.0);
  const double h = z * std::sqrt(n) / 2.0;
  const auto lo_idx = static_cast<std::size_t>(
      std::max(0.0, std::floor(n / 2.0 - h)));
  const auto hi_idx = static_cast<std::size_t>(
      std::min(n - 1.0, std::ceil(n / 2.0 + h)));
  return {med, samples[lo_idx], samples[hi_idx]};
}

namespace {

LogLogFit ols(const std::vector<double>& lx, const std::vector<double>& ly,
              const char* what) {
  const double mx = mean(lx);
  const double my = mean(ly);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0)
    throw std::invalid_argument(std::string(what) +
                                ": x values must be distinct");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ssr += r * r;
  }
  fit.r2 = (syy == 0.0) ? 1.0 : 1.0 - ssr / syy;
  const auto k = static_cast<double>(lx.size());
  fit.stderr_slope = (k > 2) ? std::sqrt(ssr / (k - 2.0) / sxx) : 0.0;
  return fit;
}

}  // namespace

LogLogFit loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("loglog_slope: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("loglog_slope: need >= 3 points");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("loglog_slope: coordinates must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return ols(lx, ly, "loglog_slope");
}

LogLogFit semilog_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("semilog_fit: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("semilog_fit: need >= 3 points");
  std::vector<double> lx(x.begin(), x.end()), ly(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0.0))
      throw std::invalid_argument("semilog_fit: y values must be positive");
    ly[i] = std::log(y[i]);
  }
  return ols(lx, ly, "semilog_fit");
}

double kolmogorov_sf(double x) {
  if (x < 1e-8) return 1.0;
  if (x < 1.18) {
    // theta-series form, accurate for small arguments
    const double pi = std::numbers::pi;
    const double t = std::exp(-pi * pi / (8.0 * x * x));
    const double cdf = std::sqrt(2.0 * pi) / x *
                       (t + std::pow(t, 9.0) + std::pow(t, 25.0) +
                        std::pow(t, 49.0));
    return 1.0 - cdf;
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: samples must be non-empty");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  return {d, kolmogorov_sf(std::sqrt(ne) * d)};
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson_correlation: need >= 2 paired points");
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("pearson_correlation: degenerate sample");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace edalab
