#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "edalab/rng.hpp"
#include "edalab/stats.hpp"

using namespace edalab;

TEST_CASE("mean_ci on constant samples has zero half-width") {
  const std::vector<double> s{3.0, 3.0, 3.0, 3.0};
  const MeanCi ci = mean_ci(s, 0.95);
  CHECK(ci.mean == 3.0);
  CHECK(ci.half_width == 0.0);
}

TEST_CASE("mean_ci {0,2} at 95%") {
  const std::vector<double> s{0.0, 2.0};
  const MeanCi ci = mean_ci(s, 0.95);
  CHECK(ci.mean == doctest::Approx(1.0));
  CHECK(ci.half_width == doctest::Approx(1.3859).epsilon(1e-3));
}

TEST_CASE("mean_ci covers the truth for standard-normal draws") {
  RngStream rng(99);
  std::vector<double> s(100000);
  for (auto& v : s) v = rng.next_gaussian();
  const MeanCi ci = mean_ci(s, 0.95);
  CHECK(std::abs(ci.mean) < 0.02);
}

TEST_CASE("statistics are order-independent") {
  std::vector<double> a{0.1, 0.7, 0.3, 1e9, -2.5, 0.33, 17.0};
  std::vector<double> b = a;
  std::reverse(b.begin(), b.end());
  CHECK(mean(a) == mean(b));
  CHECK(sample_stddev(a) == sample_stddev(b));
  CHECK(mean_ci(a, 0.9).half_width == mean_ci(b, 0.9).half_width);
  CHECK(median(a) == median(b));
}

TEST_CASE("loglog_slope recovers exact power laws") {
  const std::vector<double> x{1, 2, 4, 8};
  std::vector<double> y;
  for (double v : x) y.push_back(v * v);
  const LogLogFit fit = loglog_slope(x, y);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("loglog_slope on constant y is flat") {
  const std::vector<double> x{1, 2, 4, 8};
  const std::vector<double> y{5, 5, 5, 5};
  const LogLogFit fit = loglog_slope(x, y);
  CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("loglog_slope of y = x ln x over 100..1600 lies in [1.1, 1.25]") {
  std::vector<double> x, y;
  for (int n = 100; n <= 1600; n *= 2) {
    x.push_back(n);
    y.push_back(n * std::log(double(n)));
  }
  const LogLogFit fit = loglog_slope(x, y);
  CHECK(fit.slope >= 1.1);
  CHECK(fit.slope <= 1.25);
}

TEST_CASE("loglog_slope rejects bad input") {
  const std::vector<double> two{1, 2};
  const std::vector<double> three{1, 2, 3};
  const std::vector<double> with_negative{1, 2, -3};
  const std::vector<double> repeated{1, 1, 1};
  CHECK_THROWS_AS(loglog_slope(two, two), std::invalid_argument);
  CHECK_THROWS_AS(loglog_slope(with_negative, three), std::invalid_argument);
  CHECK_THROWS_AS(loglog_slope(repeated, three), std::invalid_argument);
}

TEST_CASE("ks: identical multisets give statistic 0, p 1") {
  const std::vector<double> a{1, 2, 2, 3, 7};
  const KsResult r = ks_two_sample(a, a);
  CHECK(r.statistic == 0.0);
  CHECK(r.p_value == 1.0);
}

TEST_CASE("ks: disjoint supports give statistic 1") {
  std::vector<double> a(100, 0.0), b(100, 1000.0);
  const KsResult r = ks_two_sample(a, b);
  CHECK(r.statistic == 1.0);
  CHECK(r.p_value < 1e-6);
}

TEST_CASE("ks calibration: same-distribution draws rarely rejected") {
  int ok = 0;
  for (int rep = 0; rep < 100; ++rep) {
    RngStream rng(derive_seed(1234, {std::uint64_t(rep)}));
    std::vector<double> a(500), b(500);
    for (auto& v : a) v = rng.next_double();
    for (auto& v : b) v = rng.next_double();
    if (ks_two_sample(a, b).p_value > 0.01) ++ok;
  }
  CHECK(ok >= 98);
}

TEST_CASE("median and median_ci basics") {
  CHECK(median({1, 2, 3}) == 2.0);
  CHECK(median({1, 2, 3, 4}) == 2.5);
  RngStream rng(7);
  std::vector<double> s(999);
  for (auto& v : s) v = rng.next_double();
  const MedianCi ci = median_ci(s, 0.95);
  CHECK(ci.lo <= ci.median);
  CHECK(ci.median <= ci.hi);
  CHECK(ci.lo > 0.4);
  CHECK(ci.hi < 0.6);
}

TEST_CASE("pearson correlation is exact on linear data") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{2, 4, 6, 8};
  CHECK(pearson_correlation(x, y) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> z{-2, -4, -6, -8};
  CHECK(pearson_correlation(x, z) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("normal quantile round numbers") {
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-5));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
}
