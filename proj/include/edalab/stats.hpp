#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace edalab {

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;
};

/// Normal-approximation confidence interval: mean +- z(level) * s / sqrt(R).
/// Requires at least two samples and level in (0, 1). Summation runs over a
/// value-sorted copy, so any permutation of the input gives identical bits.
MeanCi mean_ci(std::span<const double> samples, double level);

/// Quantile of the standard normal distribution, p in (0, 1).
double normal_quantile(double p);

double mean(std::span<const double> samples);
double sample_stddev(std::span<const double> samples);
double median(std::vector<double> samples);

struct MedianCi {
  double median = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Nonparametric order-statistic CI for the median (normal approximation of
/// the binomial ranks). Requires at least two samples.
MedianCi median_ci(std::vector<double> samples, double level);

struct LogLogFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  double r2 = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares on (ln x, ln y). Needs >= 3 points with distinct,
/// strictly positive coordinates.
LogLogFit loglog_slope(std::span<const double> x, std::span<const double> y);

/// Ordinary least squares of ln y on x (log-linear decay fits). Needs >= 3
/// points with distinct x and strictly positive y.
LogLogFit semilog_fit(std::span<const double> x, std::span<const double> y);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic Kolmogorov
/// p-value. Both samples must be non-empty.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Survival function of the Kolmogorov distribution, Q(x) = P(K > x).
double kolmogorov_sf(double x);

/// Pearson correlation coefficient; requires >= 2 points.
double pearson_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace edalab
