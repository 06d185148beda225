#include "mtc/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace mtc::stats {

namespace {

// Acklam's inverse normal CDF approximation.
double inv_norm_approx(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double q, r;
  if (p < p_low) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

double z_quantile(double prob) {
  if (!(prob > 0.0 && prob < 1.0)) {
    throw std::invalid_argument("z_quantile: probability must be in (0, 1)");
  }
  double x = inv_norm_approx(prob);
  // One Halley refinement step.
  const double e = norm_cdf(x) - prob;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

Interval wilson_interval(std::int64_t k, std::int64_t total, double alpha) {
  if (total <= 0 || k < 0 || k > total) {
    throw std::invalid_argument("wilson_interval: need 0 <= k <= total, total > 0");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("wilson_interval: alpha must be in (0, 1)");
  }
  const double z = z_quantile(1.0 - alpha / 2.0);
  const double nn = static_cast<double>(total);
  const double kk = static_cast<double>(k);
  const double z2 = z * z;
  const double denom = nn + z2;
  const double center = (kk + z2 / 2.0) / denom;
  const double half = z * std::sqrt(kk * (nn - kk) / nn + z2 / 4.0) / denom;
  Interval iv{center - half, center + half};
  if (iv.low < 0.0) iv.low = 0.0;
  if (iv.high > 1.0) iv.high = 1.0;
  return iv;
}

double binomial_two_sided_p_half(std::int64_t k, std::int64_t total) {
  if (total <= 0 || k < 0 || k > total) {
    throw std::invalid_argument("binomial test: need 0 <= k <= total, total > 0");
  }
  const std::int64_t m = std::min(k, total - k);
  if (2 * m == total) return 1.0;
  // Tail sum of Binomial(total, 1/2) pmf for i = m down to 0. Terms decay
  // fast below the mode; stop once they stop mattering.
  const double n = static_cast<double>(total);
  long double sum = 0.0L;
  for (std::int64_t i = m; i >= 0; --i) {
    const double lp = std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(i) + 1.0) -
                      std::lgamma(n - static_cast<double>(i) + 1.0) - n * std::log(2.0);
    const long double term = std::exp(static_cast<long double>(lp));
    sum += term;
    if (term < sum * 1e-18L) break;
  }
  double p = static_cast<double>(2.0L * sum);
  return p > 1.0 ? 1.0 : p;
}

std::int64_t plan_shots(double target_ci_halfwidth, double alpha) {
  if (!(target_ci_halfwidth > 0.0 && target_ci_halfwidth < 0.5)) {
    throw std::invalid_argument("plan_shots: halfwidth must be in (0, 0.5)");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("plan_shots: alpha must be in (0, 1)");
  }
  const double z = z_quantile(1.0 - alpha / 2.0);
  auto meets = [&](std::int64_t n) {
    return z * std::sqrt(0.25 / static_cast<double>(n)) <= target_ci_halfwidth;
  };
  auto n = static_cast<std::int64_t>(std::ceil((z / (2.0 * target_ci_halfwidth)) *
                                               (z / (2.0 * target_ci_halfwidth))));
  if (n < 1) n = 1;
  while (!meets(n)) ++n;
  while (n > 1 && meets(n - 1)) --n;
  return n;
}

}  // namespace mtc::stats
