#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "edalab/rng.hpp"

namespace edalab {

enum class BoundKind { upper, lower };

/// Additive drift: a process on a bounded space with one-step drift >= delta
/// (upper) or <= delta (lower) hits 0 in expected time X0 / delta. Positive
/// drift means the potential decreases.
double additive_bound(double x0, double delta, BoundKind kind);

/// Multiplicative drift: drift >= delta * X_t gives E[T] <= (1 + ln X0) / delta
/// for the first time X_t < 1. Requires X0 >= 1.
double multiplicative_bound(double x0, double delta);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated error estimate of the quadrature
};

/// Variable drift: for monotone increasing h with drift >= h(X_t),
/// E[T] <= 1/h(1) + integral_1^X0 dx / h(x). The integral is evaluated by
/// adaptive Simpson bisection to the requested absolute tolerance.
/// Throws std::domain_error if h is sampled non-positive.
QuadratureResult variable_bound(double x0,
                                const std::function<double(double)>& h,
                                double quadrature_tol);

struct DriftBin {
  double lo = 0.0;
  double hi = 0.0;
  double mean_x = 0.0;   // mean conditioning potential inside the bin
  double mean = 0.0;     // mean one-step decrease E[X_t - X_{t+1} | bin]
  double stderr_ = 0.0;
  std::size_t count = 0;
  bool has_estimate = false;
};

/// Binned empirical one-step drift of a scalar potential over traces.
/// Each trace is a time series X_0, X_1, ...; the difference X_t - X_{t+1}
/// is binned by X_t. Values outside the bin edges are ignored. Bins with
/// fewer than min_count samples carry no estimate.
struct DriftEstimate {
  std::vector<DriftBin> bins;
};

DriftEstimate empirical_drift(const std::vector<std::vector<double>>& traces,
                              std::span<const double> bin_edges,
                              std::size_t min_count = 2);

/// Monte Carlo check of a drift-theorem bound on a synthetic chain whose
/// drift provably satisfies the hypothesis. pass holds when the empirical
/// mean hitting time respects the bound direction at 99% confidence.
struct ChainValidation {
  std::string name;
  std::string theorem;
  double bound = 0.0;
  BoundKind kind = BoundKind::upper;
  double empirical_mean = 0.0;
  double ci99_half = 0.0;
  bool pass = false;
};

/// Biased walk on {0..20}: from X0 = 10, step -1 w.p. 3/4 and +1 w.p. 1/4,
/// truncated at the upper boundary, absorbed at 0. Drift >= 1/2, so the
/// additive bound gives E[T] <= 20.
ChainValidation validate_additive_walk(std::uint64_t runs, std::uint64_t seed);

/// Binomial thinning with retention 0.9 from X0 = 64; drift = 0.1 * X_t,
/// checked against the multiplicative bound (1 + ln 64) / 0.1.
ChainValidation validate_multiplicative_thinning(std::uint64_t runs,
                                                 std::uint64_t seed);

/// Uniform-decrement chain from X0 = 100 whose drift equals
/// h(x) = x - x^(3/2)/4 on [1,4) and sqrt(x) on [4, inf), checked against
/// the variable bound.
ChainValidation validate_variable_sqrt(std::uint64_t runs, std::uint64_t seed);

}  // namespace edalab
