#include "mtc/selftest.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mtc/gates.hpp"
#include "mtc/oracle.hpp"
#include "mtc/protocol.hpp"
#include "mtc/rng.hpp"

namespace mtc::selftest {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kGoldenSeed = 20240823;

const std::vector<double> kWeights = {0.1, 0.25, 0.5, 0.75, 0.9};

std::vector<double> phi_grid(int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) {
    g.push_back(2.0 * kPi * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return g;
}

CheckResult oracle_parity_sweep(double fault) {
  CheckResult r{"analytic parity vs dense oracle", true, {}};
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (double p : kWeights) {
      for (double phi : phi_grid(13)) {
        const TwoComponentState s(BasisString(n, 0), p, phi);
        ParityDistribution analytic = analytic_post_hadamard(s);
        analytic.p_even += fault;
        const auto table =
            oracle::enumerate_outcomes(apply_hadamard_all(build_statevector(s)));
        worst = std::max(worst, oracle::cross_check(analytic, table));
      }
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  r.detail = os.str();
  r.passed = worst <= 1e-12;
  return r;
}

CheckResult pattern_independence() {
  CheckResult r{"pattern independence of parity statistics", true, {}};
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const TwoComponentState ref(BasisString(n, 0), 0.3, 1.0);
    const ParityDistribution analytic = analytic_post_hadamard(ref);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const TwoComponentState s(BasisString(n, bits), 0.3, 1.0);
      const auto table =
          oracle::enumerate_outcomes(apply_hadamard_all(build_statevector(s)));
      worst = std::max(worst, oracle::cross_check(analytic, table));
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  r.detail = os.str();
  r.passed = worst <= 1e-12;
  return r;
}

CheckResult mixture_flatness() {
  CheckResult r{"mixture flatness after Hadamard", true, {}};
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const ClassicalTwoMixture mix(BasisString(n, n > 1 ? 0b10 : 0), 0.3);
    auto rho = oracle::densify_mixture(mix);
    rho = oracle::evolve_density(rho, oracle::HadamardAll{});
    const auto table = oracle::enumerate_outcomes(rho);
    const double uniform = std::exp2(static_cast<double>(-n));
    for (double pr : table.probs) worst = std::max(worst, std::abs(pr - uniform));
    worst = std::max(worst, std::abs(table.p_even - 0.5));
    // The phase-shifted mixture must stay flat too.
    auto rho2 = oracle::densify_mixture(mix);
    rho2 = oracle::evolve_density(rho2, oracle::PhaseShift{1, mix.pattern.bit(1)});
    rho2 = oracle::evolve_density(rho2, oracle::HadamardAll{});
    const auto table2 = oracle::enumerate_outcomes(rho2);
    for (double pr : table2.probs) worst = std::max(worst, std::abs(pr - uniform));
  }
  std::ostringstream os;
  os << "max deviation from uniform " << worst;
  r.detail = os.str();
  r.passed = worst <= 1e-12;
  return r;
}

CheckResult phase_round_trip() {
  CheckResult r{"exact phase inversion round trip", true, {}};
  double worst = 0.0;
  for (double p : kWeights) {
    if (std::sqrt(p * (1.0 - p)) < 0.05) continue;
    for (double phi : phi_grid(13)) {
      const double back =
          invert_phase(p, analytic_p_even(p, phi), analytic_p_even_shifted(p, phi));
      double diff = std::abs(wrap_angle(back - phi));
      diff = std::min(diff, 2.0 * kPi - diff);
      worst = std::max(worst, diff);
    }
  }
  std::ostringstream os;
  os << "max |phi_hat - phi| " << worst;
  r.detail = os.str();
  r.passed = worst <= 1e-9;
  return r;
}

CheckResult golden_extraction() {
  CheckResult r{"golden-seed phase extraction", true, {}};
  const TwoComponentState s(BasisString::from_string("0000"), 0.5, 2.4);
  ProtocolOptions opts;
  opts.shots_per_run = 100000;
  opts.seed = kGoldenSeed;
  const auto res = run_phase_extraction(s, opts);
  const double width = wrap_angle(res.estimate.ci_high - res.estimate.ci_low);
  const bool covered = arc_contains(res.estimate.ci_low, res.estimate.ci_high, 2.4);
  std::ostringstream os;
  os << "phi_hat " << res.estimate.phi_hat << ", arc width " << width;
  r.detail = os.str();
  r.passed = covered && width < 0.1;
  return r;
}

CheckResult golden_discrimination() {
  CheckResult r{"golden-seed discrimination suite", true, {}};
  struct Case {
    Preparation prep;
    Verdict expected;
  };
  auto pure = [](const char* pat, double p, double phi) {
    return Preparation{TwoComponentState(BasisString::from_string(pat), p, phi)};
  };
  auto mixed = [](const char* pat, double p) {
    return Preparation{ClassicalTwoMixture(BasisString::from_string(pat), p)};
  };
  const std::vector<Case> cases = {
      {pure("000", 0.5, kPi / 2.0), Verdict::kEntangled},
      {pure("0000", 0.5, -kPi / 2.0), Verdict::kEntangled},
      {pure("01", 0.3, 0.0), Verdict::kEntangled},
      {pure("00000", 0.5, 0.0), Verdict::kEntangled},
      {pure("010", 0.25, kPi), Verdict::kEntangled},
      {pure("1011", 0.7, 2.0), Verdict::kEntangled},
      {pure("0110", 0.5, 2.4), Verdict::kEntangled},
      {pure("000111", 0.1, 1.0), Verdict::kEntangled},
      {pure("101", 0.9, 4.0), Verdict::kEntangled},
      {pure("11", 0.6, 5.5), Verdict::kEntangled},
      {mixed("000", 0.3), Verdict::kConsistentWithMixture},
      {mixed("0000", 0.5), Verdict::kConsistentWithMixture},
      {mixed("01", 0.7), Verdict::kConsistentWithMixture},
      {mixed("00000", 0.9), Verdict::kConsistentWithMixture},
      {mixed("010", 0.25), Verdict::kConsistentWithMixture},
      {mixed("1011", 0.4), Verdict::kConsistentWithMixture},
      {mixed("0110", 0.55), Verdict::kConsistentWithMixture},
      {mixed("000111", 0.15), Verdict::kConsistentWithMixture},
      {mixed("101", 0.85), Verdict::kConsistentWithMixture},
      {mixed("11", 0.65), Verdict::kConsistentWithMixture},
  };
  int correct = 0;
  for (size_t i = 0; i < cases.size(); ++i) {
    ProtocolOptions opts;
    opts.shots_per_run = 100000;
    opts.seed = rng::derive(kGoldenSeed, 100 + i);
    const Decision d = run_discrimination(cases[i].prep, opts);
    if (d.verdict == cases[i].expected) ++correct;
  }
  std::ostringstream os;
  os << correct << "/" << cases.size() << " verdicts correct";
  r.detail = os.str();
  r.passed = correct == static_cast<int>(cases.size());
  return r;
}

}  // namespace

std::vector<CheckResult> run(const Options& opts) {
  std::vector<CheckResult> results;
  results.push_back(oracle_parity_sweep(opts.inject_p_even_fault));
  results.push_back(pattern_independence());
  results.push_back(mixture_flatness());
  results.push_back(phase_round_trip());
  results.push_back(golden_extraction());
  results.push_back(golden_discrimination());
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace mtc::selftest
