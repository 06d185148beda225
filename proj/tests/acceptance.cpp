// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criterion 8 drives the real CLI binary (path in the
// MTC_CLI environment variable).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mtc/gates.hpp"
#include "mtc/measurement.hpp"
#include "mtc/oracle.hpp"
#include "mtc/protocol.hpp"
#include "mtc/rng.hpp"

namespace fs = std::filesystem;
using namespace mtc;
using njson = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kWeights = {0.1, 0.25, 0.5, 0.75, 0.9};

std::vector<double> phi_grid13() {
  std::vector<double> g;
  for (int i = 0; i < 13; ++i) g.push_back(2.0 * kPi * i / 12.0);
  return g;
}

struct Criterion {
  std::string name;
  bool passed = false;
  std::string detail;
};

double circ_dist(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, 2.0 * kPi - d);
}

// 1. Analytic p_even vs exhaustive dense enumeration, n in 1..8.
Criterion criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (double p : kWeights) {
      for (double phi : phi_grid13()) {
        const TwoComponentState s(BasisString(n, 0), p, phi);
        const auto table =
            oracle::enumerate_outcomes(apply_hadamard_all(build_statevector(s)));
        worst = std::max(worst, std::abs(analytic_p_even(p, s.phi) - table.p_even));
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "max deviation " << worst << ", " << secs << " s";
  return {"1 parity formula vs dense oracle", worst <= 1e-12 && secs < 30.0, os.str()};
}

// 2. Sign irrelevance: exhaustive pattern sweep at (p=0.3, phi=1.0).
Criterion criterion2() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto analytic = analytic_post_hadamard(TwoComponentState(BasisString(n, 0), 0.3, 1.0));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const TwoComponentState s(BasisString(n, bits), 0.3, 1.0);
      const auto table =
          oracle::enumerate_outcomes(apply_hadamard_all(build_statevector(s)));
      worst = std::max(worst, oracle::cross_check(analytic, table));
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst << " over all patterns";
  return {"2 expansion signs do not affect statistics", worst <= 1e-12, os.str()};
}

// 3. Mixture flatness through the density-operator oracle.
Criterion criterion3() {
  double worst = 0.0;
  bool analytic_exact = true;
  for (int n = 1; n <= 8; ++n) {
    const ClassicalTwoMixture mix(BasisString(n, 1), 0.3);
    const double uniform = std::exp2(static_cast<double>(-n));
    auto rho = oracle::evolve_density(oracle::densify_mixture(mix), oracle::HadamardAll{});
    for (std::uint64_t i = 0; i < rho.dim(); ++i) {
      worst = std::max(worst, std::abs(rho.at(i, i).real() - uniform));
    }
    if (analytic_mixture_post_hadamard(mix).p_even != 0.5) analytic_exact = false;
    // Shifted mixture must be unchanged.
    auto shifted = oracle::evolve_density(oracle::densify_mixture(mix),
                                          oracle::PhaseShift{1, mix.pattern.bit(1)});
    const auto base = oracle::densify_mixture(mix);
    for (std::uint64_t i = 0; i < shifted.data().size(); ++i) {
      worst = std::max(worst, std::abs(shifted.data()[i] - base.data()[i]));
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst << ", analytic p_even exact: "
     << (analytic_exact ? "yes" : "no");
  return {"3 mixture flatness and shift invariance", worst <= 1e-12 && analytic_exact,
          os.str()};
}

// 4. phi = +-pi/2: plain run uniform, shifted run moves by -+sqrt(p(1-p)).
Criterion criterion4() {
  double worst = 0.0;
  for (double p : {0.1, 0.5, 0.9}) {
    for (double sign : {1.0, -1.0}) {
      const double phi = sign * kPi / 2.0;
      const TwoComponentState s(BasisString::from_string("0000"), p, phi);
      const auto plain =
          oracle::enumerate_outcomes(apply_hadamard_all(build_statevector(s)));
      const double uniform = std::exp2(-4.0);
      for (double pr : plain.probs) worst = std::max(worst, std::abs(pr - uniform));
      auto sv = apply_phase_shift(build_statevector(s), 1, s.pattern.bit(1));
      const auto shifted = oracle::enumerate_outcomes(apply_hadamard_all(sv));
      const double expected = 0.5 - sign * std::sqrt(p * (1.0 - p));
      worst = std::max(worst, std::abs(shifted.p_even - expected));
      worst = std::max(worst,
                       std::abs(analytic_p_even_shifted(p, phi) - shifted.p_even));
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  return {"4 degenerate-case repair at phi = +-pi/2", worst <= 1e-12, os.str()};
}

// 5. Exact inversion round trip over the criterion-1 grid.
Criterion criterion5() {
  double worst = 0.0;
  for (double p : kWeights) {
    if (std::sqrt(p * (1.0 - p)) < 0.05) continue;
    for (double phi : phi_grid13()) {
      const double back =
          invert_phase(p, analytic_p_even(p, phi), analytic_p_even_shifted(p, phi));
      worst = std::max(worst, circ_dist(back, wrap_angle(phi)));
    }
  }
  std::ostringstream os;
  os << "max circular error " << worst;
  return {"5 exact phase round trip", worst <= 1e-9, os.str()};
}

// 6. Golden-seed statistical end-to-end.
Criterion criterion6() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream os;

  const TwoComponentState target(BasisString::from_string("0000"), 0.5, 2.4);
  ProtocolOptions opts;
  opts.shots_per_run = 100000;
  opts.seed = 20240823;
  const auto res = run_phase_extraction(target, opts);
  const double width = wrap_angle(res.estimate.ci_high - res.estimate.ci_low);
  const bool covered = arc_contains(res.estimate.ci_low, res.estimate.ci_high, 2.4);
  ok = ok && covered && width < 0.1;
  os << "phi_hat " << res.estimate.phi_hat << " (width " << width << ")";

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
    ProtocolOptions dopts;
    dopts.shots_per_run = 100000;
    dopts.seed = rng::derive(20240823, 100 + i);
    if (run_discrimination(cases[i].prep, dopts).verdict == cases[i].expected) {
      ++correct;
    }
  }
  ok = ok && correct == static_cast<int>(cases.size());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 60.0;
  os << ", verdicts " << correct << "/20, " << secs << " s";
  return {"6 golden-seed statistical end-to-end", ok, os.str()};
}

// 7. x-basis distribution equals Hadamard-then-z bit-identically.
Criterion criterion7() {
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n) {
    for (double p : kWeights) {
      for (double phi : phi_grid13()) {
        const TwoComponentState s(BasisString(n, 0), p, phi);
        const auto a = analytic_post_hadamard(s);
        const auto b = x_basis_distribution(s);
        if (a.p_even != b.p_even || a.per_string_even != b.per_string_even ||
            a.per_string_odd != b.per_string_odd) {
          ok = false;
        }
      }
    }
  }
  return {"7 x-basis equivalence (bit-identical)", ok,
          ok ? "all grid points identical" : "mismatch found"};
}

// 8. Byte-identical CLI reports at 1 and 8 workers, timing excluded.
Criterion criterion8() {
  const char* cli = std::getenv("MTC_CLI");
  if (cli == nullptr) {
    return {"8 determinism across worker counts", false, "MTC_CLI not set"};
  }
  const fs::path dir = fs::temp_directory_path();
  const fs::path cfg = dir / "mtc_acc_cfg.json";
  {
    njson j;
    j["scenario"] = {{"kind", "pure"}, {"n", 4}, {"pattern", "0101"}, {"p", 0.4},
                     {"phi", 1.1}};
    j["shots_per_run"] = 50000;
    j["seed"] = 12345;
    std::ofstream(cfg) << j.dump(2);
  }
  auto run_once = [&](const std::string& cmd, int workers, const fs::path& out) {
    const std::string full = std::string(cli) + " " + cmd + " --config " +
                             cfg.string() + " --workers " + std::to_string(workers) +
                             " --out " + out.string() + " 2> /dev/null";
    return std::system(full.c_str()) == 0;
  };
  auto stripped = [](const fs::path& p) {
    std::ifstream in(p);
    njson j = njson::parse(in);
    j.erase("timing");
    return j.dump();
  };
  bool ok = true;
  for (const std::string cmd : {std::string("extract-phase"), std::string("discriminate")}) {
    const fs::path o1 = dir / "mtc_acc_w1.json";
    const fs::path o8 = dir / "mtc_acc_w8.json";
    const fs::path o1b = dir / "mtc_acc_w1b.json";
    ok = ok && run_once(cmd, 1, o1) && run_once(cmd, 8, o8) && run_once(cmd, 1, o1b);
    if (ok) {
      const auto s1 = stripped(o1);
      ok = s1 == stripped(o8) && s1 == stripped(o1b);
    }
    fs::remove(o1);
    fs::remove(o8);
    fs::remove(o1b);
    if (!ok) break;
  }
  fs::remove(cfg);
  return {"8 determinism across worker counts", ok,
          ok ? "reports byte-identical modulo timing" : "reports differ"};
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());
  results.push_back(criterion7());
  results.push_back(criterion8());

  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.name << " ("
              << r.detail << ")\n";
    all = all && r.passed;
  }
  std::cout << (all ? "acceptance: all criteria passed\n"
                    : "acceptance: FAILURES present\n");
  return all ? 0 : 1;
}
