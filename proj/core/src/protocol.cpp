#include "mtc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mtc/gates.hpp"
#include "mtc/rng.hpp"

namespace mtc {

namespace {

constexpr double kPi = std::numbers::pi;

double signal_amplitude(double p) { return std::sqrt(p * (1.0 - p)); }

void check_weight_open(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": p must satisfy 0 < p < 1");
  }
}

enum class RunKind { kZ, kHadamard, kShiftedHadamard };

const BasisString& pattern_of(const Preparation& prep) {
  if (const auto* s = std::get_if<TwoComponentState>(&prep)) return s->pattern;
  return std::get<ClassicalTwoMixture>(prep).pattern;
}

// One protocol run on fresh copies of the preparation. The shifted run
// applies e^{i pi/2} to qubit 1 (reference bit = pattern bit 1) before the
// all-qubit Hadamard; for the two-component state that is phi -> phi + pi/2,
// and a diagonal mixture is left unchanged.
MeasurementRecord execute_run(const Preparation& prep, RunKind kind,
                              const ProtocolOptions& opts, std::uint64_t run_seed,
                              std::string source) {
  const auto* pure = std::get_if<TwoComponentState>(&prep);
  if (kind == RunKind::kZ) {
    const OutcomeDistribution d =
        pure ? pure_z_distribution(*pure)
             : mixture_z_distribution(std::get<ClassicalTwoMixture>(prep));
    if (opts.method == SamplingMethod::kDense && pure) {
      return sample_shots(build_statevector(*pure), opts.shots_per_run, run_seed,
                          opts.workers, std::move(source));
    }
    return sample_shots(d, opts.shots_per_run, run_seed, opts.workers,
                        std::move(source));
  }
  if (pure && opts.method == SamplingMethod::kDense) {
    StateVector sv = build_statevector(*pure);
    if (kind == RunKind::kShiftedHadamard) {
      sv = apply_phase_shift(sv, 1, pure->pattern.bit(1));
    }
    return sample_shots(apply_hadamard_all(sv), opts.shots_per_run, run_seed,
                        opts.workers, std::move(source));
  }
  ParityDistribution d;
  if (pure) {
    const double phi = kind == RunKind::kShiftedHadamard
                           ? wrap_angle(pure->phi + kPi / 2.0)
                           : pure->phi;
    d = analytic_post_hadamard(TwoComponentState(pure->pattern, pure->p, phi));
  } else {
    d = analytic_mixture_post_hadamard(std::get<ClassicalTwoMixture>(prep));
  }
  return sample_shots(d, opts.shots_per_run, run_seed, opts.workers,
                      std::move(source));
}

RunCounts z_counts(const MeasurementRecord& rec, const PatternStatistics& st,
                   std::uint64_t seed) {
  RunCounts c;
  c.seed = seed;
  c.total = st.total;
  c.pattern_count = st.pattern_count;
  c.complement_count = st.complement_count;
  c.stray_count = st.stray_count;
  (void)rec;
  return c;
}

RunCounts parity_counts(const ParityStatistics& st, std::uint64_t seed) {
  RunCounts c;
  c.seed = seed;
  c.total = st.total;
  c.even_count = st.even_count;
  return c;
}

}  // namespace

double analytic_p_even(double p, double phi) {
  check_weight_open(p, "analytic_p_even");
  return 0.5 + signal_amplitude(p) * std::cos(phi);
}

double analytic_p_even_shifted(double p, double phi) {
  check_weight_open(p, "analytic_p_even_shifted");
  return 0.5 - signal_amplitude(p) * std::sin(phi);
}

double invert_phase_unchecked(double p_hat, double p_even_hat,
                              double p_even_shift_hat) {
  const double amp = std::max(signal_amplitude(p_hat), 1e-12);
  double c = (p_even_hat - 0.5) / amp;
  double s = (0.5 - p_even_shift_hat) / amp;
  c = std::clamp(c, -1.0, 1.0);
  s = std::clamp(s, -1.0, 1.0);
  return wrap_angle(std::atan2(s, c));
}

double invert_phase(double p_hat, double p_even_hat, double p_even_shift_hat,
                    double degeneracy_threshold) {
  check_weight_open(p_hat, "invert_phase");
  if (!(p_even_hat >= 0.0 && p_even_hat <= 1.0) ||
      !(p_even_shift_hat >= 0.0 && p_even_shift_hat <= 1.0)) {
    throw std::invalid_argument("invert_phase: probabilities must lie in [0, 1]");
  }
  if (signal_amplitude(p_hat) < degeneracy_threshold) {
    throw degenerate_phase_error(
        "invert_phase: sqrt(p(1-p)) below degeneracy threshold; phase unidentifiable");
  }
  return invert_phase_unchecked(p_hat, p_even_hat, p_even_shift_hat);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kEntangled: return "Entangled";
    case Verdict::kConsistentWithMixture: return "ConsistentWithMixture";
    case Verdict::kOutsideFamily: return "OutsideFamily";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(PhaseQuality q) {
  return q == PhaseQuality::kOk ? "OK" : "NearDegenerate";
}

bool arc_contains(double low, double high, double phi) {
  const double span = wrap_angle(high - low);
  const double offset = wrap_angle(phi - low);
  return offset <= span + 1e-12;
}

PhaseExtractionResult run_phase_extraction(const TwoComponentState& state,
                                           const ProtocolOptions& opts) {
  PhaseExtractionResult res;
  const Preparation prep = state;
  const std::uint64_t seed1 = rng::derive(opts.seed, 1);
  const std::uint64_t seed2 = rng::derive(opts.seed, 2);
  const std::uint64_t seed3 = rng::derive(opts.seed, 3);

  const MeasurementRecord rec1 =
      execute_run(prep, RunKind::kZ, opts, seed1, "z-basis");
  res.pattern_stats = tally_pattern(rec1, state.pattern, opts.alpha);
  res.z_run = z_counts(rec1, res.pattern_stats, seed1);
  const double stray_frac = static_cast<double>(res.pattern_stats.stray_count) /
                            static_cast<double>(res.pattern_stats.total);
  if (stray_frac > opts.max_stray_fraction || !res.pattern_stats.p_hat_defined) {
    throw outside_family_error(
        "run_phase_extraction: z-basis outcomes stray from the two-component family");
  }

  const MeasurementRecord rec2 =
      execute_run(prep, RunKind::kHadamard, opts, seed2, "hadamard");
  res.parity_stats = tally_parity(rec2, opts.alpha);
  res.hadamard_run = parity_counts(res.parity_stats, seed2);

  const MeasurementRecord rec3 =
      execute_run(prep, RunKind::kShiftedHadamard, opts, seed3, "shifted-hadamard");
  res.shifted_parity_stats = tally_parity(rec3, opts.alpha);
  res.shifted_run = parity_counts(res.shifted_parity_stats, seed3);

  const double p_hat = res.pattern_stats.p_hat;
  const double pe = res.parity_stats.p_even_hat;
  const double ps = res.shifted_parity_stats.p_even_hat;

  PhaseEstimate& est = res.estimate;
  est.p_hat = p_hat;
  est.shots_used = {res.z_run.total, res.hadamard_run.total, res.shifted_run.total};
  est.quality = signal_amplitude(p_hat) < opts.degeneracy_threshold
                    ? PhaseQuality::kNearDegenerate
                    : PhaseQuality::kOk;
  est.phi_hat = invert_phase_unchecked(p_hat, pe, ps);

  // Parametric bootstrap: resample the three binomial counts at their point
  // estimates, re-invert, take the central 1-alpha arc of the deviations.
  const std::int64_t den1 = res.pattern_stats.pattern_count +
                            res.pattern_stats.complement_count;
  std::mt19937_64 gen(rng::derive(opts.seed, 4));
  std::binomial_distribution<std::int64_t> d1(den1, p_hat);
  std::binomial_distribution<std::int64_t> d2(res.hadamard_run.total, pe);
  std::binomial_distribution<std::int64_t> d3(res.shifted_run.total, ps);
  std::vector<double> deviations;
  deviations.reserve(static_cast<size_t>(opts.bootstrap_replicates));
  for (int b = 0; b < opts.bootstrap_replicates; ++b) {
    double pb = static_cast<double>(d1(gen)) / static_cast<double>(den1);
    pb = std::clamp(pb, 1e-12, 1.0 - 1e-12);
    const double pe_b = static_cast<double>(d2(gen)) /
                        static_cast<double>(res.hadamard_run.total);
    const double ps_b = static_cast<double>(d3(gen)) /
                        static_cast<double>(res.shifted_run.total);
    const double phi_b = invert_phase_unchecked(pb, pe_b, ps_b);
    double dev = wrap_angle(phi_b - est.phi_hat);
    if (dev > kPi) dev -= 2.0 * kPi;  // into (-pi, pi]
    deviations.push_back(dev);
  }
  std::sort(deviations.begin(), deviations.end());
  auto quantile = [&](double q) {
    const auto last = static_cast<double>(deviations.size() - 1);
    const auto idx = static_cast<size_t>(std::llround(q * last));
    return deviations[std::min(idx, deviations.size() - 1)];
  };
  est.ci_low = wrap_angle(est.phi_hat + quantile(opts.alpha / 2.0));
  est.ci_high = wrap_angle(est.phi_hat + quantile(1.0 - opts.alpha / 2.0));
  return res;
}

Decision run_discrimination(const Preparation& prep, const ProtocolOptions& opts) {
  Decision dec;
  dec.alpha = opts.alpha;
  const BasisString& pattern = pattern_of(prep);
  const std::uint64_t seed1 = rng::derive(opts.seed, 1);
  const std::uint64_t seed2 = rng::derive(opts.seed, 2);
  const std::uint64_t seed3 = rng::derive(opts.seed, 3);

  const MeasurementRecord rec1 =
      execute_run(prep, RunKind::kZ, opts, seed1, "z-basis");
  const PatternStatistics pst = tally_pattern(rec1, pattern, opts.alpha);
  dec.z_run = z_counts(rec1, pst, seed1);
  const double stray_frac =
      static_cast<double>(pst.stray_count) / static_cast<double>(pst.total);
  if (stray_frac > opts.max_stray_fraction || !pst.p_hat_defined) {
    dec.verdict = Verdict::kOutsideFamily;
    return dec;
  }
  dec.p_hat = pst.p_hat;

  const MeasurementRecord rec2 =
      execute_run(prep, RunKind::kHadamard, opts, seed2, "hadamard");
  const ParityStatistics t2 = tally_parity(rec2, opts.alpha);
  dec.hadamard_run = parity_counts(t2, seed2);
  dec.p_even_hat = t2.p_even_hat;
  dec.p_value = stats::binomial_two_sided_p_half(t2.even_count, t2.total);
  if (dec.p_value < opts.alpha) {
    dec.verdict = Verdict::kEntangled;
    return dec;
  }

  // phi = +-pi/2 lands exactly on p_even = 1/2; the shifted run moves the
  // signal onto the sin component.
  const MeasurementRecord rec3 =
      execute_run(prep, RunKind::kShiftedHadamard, opts, seed3, "shifted-hadamard");
  const ParityStatistics t3 = tally_parity(rec3, opts.alpha);
  dec.shifted_run = parity_counts(t3, seed3);
  dec.shifted_run_executed = true;
  dec.p_even_shift_hat = t3.p_even_hat;
  dec.p_value_shifted = stats::binomial_two_sided_p_half(t3.even_count, t3.total);
  if (dec.p_value_shifted < opts.alpha) {
    dec.verdict = Verdict::kEntangled;
    return dec;
  }

  const double amp_hat = signal_amplitude(std::clamp(dec.p_hat, 0.0, 1.0));
  dec.verdict = amp_hat < opts.degeneracy_threshold
                    ? Verdict::kInconclusive  // no parity signal possible for any phi
                    : Verdict::kConsistentWithMixture;
  return dec;
}

}  // namespace mtc
