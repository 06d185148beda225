// End-to-end procedures: relative-phase extraction by inverting the
// parity statistic of two Hadamard runs (plain and phase-shifted), and
// discrimination of the entangled state from its classical mixture.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "mtc/measurement.hpp"
#include "mtc/states.hpp"

namespace mtc {

struct degenerate_phase_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct outside_family_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p_even = 1/2 + sqrt(p(1-p)) cos(phi).
double analytic_p_even(double p, double phi);

// After the e^{i pi/2} shift on one qubit: 1/2 - sqrt(p(1-p)) sin(phi).
double analytic_p_even_shifted(double p, double phi);

// Recover phi from the two parity estimates. cos comes from the plain run,
// sin from the shifted run, resolved uniquely with atan2. Throws
// degenerate_phase_error when sqrt(p_hat(1-p_hat)) < degeneracy_threshold:
// the signal amplitude vanishes and the phase is unidentifiable.
double invert_phase(double p_hat, double p_even_hat, double p_even_shift_hat,
                    double degeneracy_threshold = 0.05);

// As above but never throws; degenerate inputs give a clamped atan2 result.
double invert_phase_unchecked(double p_hat, double p_even_hat,
                              double p_even_shift_hat);

// Either preparation the discrimination protocol must tell apart.
using Preparation = std::variant<TwoComponentState, ClassicalTwoMixture>;

enum class SamplingMethod {
  kAnalytic,  // sparse/parity-sector sampling, any n <= 64
  kDense,     // full state-vector simulation, n <= kDenseCap
};

struct ProtocolOptions {
  std::int64_t shots_per_run = 100000;
  std::uint64_t seed = 0;
  double alpha = 0.01;
  double degeneracy_threshold = 0.05;
  int bootstrap_replicates = 1000;
  double max_stray_fraction = 0.01;
  int workers = 1;
  SamplingMethod method = SamplingMethod::kAnalytic;
};

enum class PhaseQuality { kOk, kNearDegenerate };

struct PhaseEstimate {
  double phi_hat = 0.0;  // in [0, 2pi)
  double p_hat = 0.0;
  double ci_low = 0.0;   // circular arc [ci_low, ci_high) contains phi_hat
  double ci_high = 0.0;
  std::array<std::int64_t, 3> shots_used{};
  PhaseQuality quality = PhaseQuality::kOk;
};

// Per-run raw counts, enough to re-derive every reported statistic.
struct RunCounts {
  std::uint64_t seed = 0;
  std::int64_t total = 0;
  std::int64_t pattern_count = 0;     // z-basis run only
  std::int64_t complement_count = 0;  // z-basis run only
  std::int64_t stray_count = 0;       // z-basis run only
  std::int64_t even_count = 0;        // Hadamard runs only
};

struct PhaseExtractionResult {
  PhaseEstimate estimate;
  RunCounts z_run;
  RunCounts hadamard_run;
  RunCounts shifted_run;
  PatternStatistics pattern_stats;
  ParityStatistics parity_stats;
  ParityStatistics shifted_parity_stats;
};

enum class Verdict { kEntangled, kConsistentWithMixture, kOutsideFamily, kInconclusive };

std::string to_string(Verdict v);
std::string to_string(PhaseQuality q);

struct Decision {
  Verdict verdict = Verdict::kInconclusive;
  double p_hat = 0.0;
  double p_even_hat = 0.0;
  double p_value = 1.0;  // plain Hadamard run, H0: p_even = 1/2
  bool shifted_run_executed = false;
  double p_even_shift_hat = 0.0;
  double p_value_shifted = 1.0;
  double alpha = 0.0;
  RunCounts z_run;
  RunCounts hadamard_run;
  RunCounts shifted_run;  // meaningful only when shifted_run_executed
};

// Three runs on fresh copies of the state: (i) z-basis for p_hat,
// (ii) Hadamard-then-z for p_even, (iii) phase-shift on qubit 1 then
// Hadamard-then-z for the sin component. Bootstrap CI is parametric and
// circular. Throws outside_family_error if run (i) strays too often.
PhaseExtractionResult run_phase_extraction(const TwoComponentState& state,
                                           const ProtocolOptions& opts);

// Exact two-sided binomial test of p_even = 1/2 on the Hadamard run; the
// shifted run is only consulted when the first fails to reject, covering
// the phi = +-pi/2 blind spot.
Decision run_discrimination(const Preparation& prep, const ProtocolOptions& opts);

// True when angle phi lies on the circular arc from low counterclockwise
// to high (all in radians, any representatives).
bool arc_contains(double low, double high, double phi);

}  // namespace mtc
