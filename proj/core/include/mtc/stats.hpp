// Small statistics toolkit: normal quantiles, Wilson score intervals,
// the exact two-sided binomial test against p = 1/2, and shot planning.

#pragma once

#include <cstdint>

namespace mtc::stats {

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Inverse standard normal CDF (Acklam's rational approximation, refined
// with one Halley step; relative error well below 1e-9).
double z_quantile(double prob);

// Wilson score interval for k successes out of total at level 1 - alpha.
Interval wilson_interval(std::int64_t k, std::int64_t total, double alpha);

// Exact two-sided p-value for H0: success probability = 1/2, using the
// symmetry of the null: p = 2 * P(X <= min(k, n-k)), capped at 1.
double binomial_two_sided_p_half(std::int64_t k, std::int64_t total);

// Smallest N with z_{alpha/2} * sqrt(0.25 / N) <= halfwidth.
std::int64_t plan_shots(double target_ci_halfwidth, double alpha);

}  // namespace mtc::stats
