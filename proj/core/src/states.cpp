#include "mtc/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mtc {

namespace {

void check_weight(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("weight p must satisfy 0 < p < 1, got " + std::to_string(p));
  }
}

}  // namespace

double wrap_angle(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;  // fmod rounding at the seam
  return w;
}

TwoComponentState::TwoComponentState(BasisString pattern_, double p_, double phi_)
    : pattern(pattern_), p(p_), phi(wrap_angle(phi_)) {
  check_weight(p);
}

ClassicalTwoMixture::ClassicalTwoMixture(BasisString pattern_, double p_)
    : pattern(pattern_), p(p_) {
  check_weight(p);
}

StateVector::StateVector(int n, std::vector<cplx> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (n < 1 || n > kDenseCap) {
    throw capacity_error("StateVector: qubit count " + std::to_string(n) +
                         " exceeds dense cap " + std::to_string(kDenseCap));
  }
  if (amps_.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^n");
  }
  if (std::abs(norm_sq() - 1.0) > 1e-12) {
    throw std::invalid_argument("StateVector: not normalized");
  }
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return s;
}

double OutcomeDistribution::total() const {
  double s = 0.0;
  for (const auto& [idx, mass] : probs) s += mass;
  return s;
}

StateVector build_statevector(const TwoComponentState& state) {
  const int n = state.n();
  if (n > kDenseCap) {
    throw capacity_error("build_statevector: n = " + std::to_string(n) +
                         " exceeds dense cap " + std::to_string(kDenseCap));
  }
  std::vector<cplx> amps(std::uint64_t{1} << n, cplx{0.0, 0.0});
  amps[state.pattern.bits()] = cplx{std::sqrt(state.p), 0.0};
  amps[state.pattern.complement().bits()] =
      std::polar(std::sqrt(1.0 - state.p), state.phi);
  return StateVector(n, std::move(amps));
}

OutcomeDistribution pure_z_distribution(const TwoComponentState& state) {
  // Identical to the mixture's distribution; the phase is invisible in z.
  OutcomeDistribution d;
  d.n = state.n();
  d.probs = {{state.pattern.bits(), state.p},
             {state.pattern.complement().bits(), 1.0 - state.p}};
  return d;
}

OutcomeDistribution mixture_z_distribution(const ClassicalTwoMixture& mix) {
  OutcomeDistribution d;
  d.n = mix.n();
  d.probs = {{mix.pattern.bits(), mix.p},
             {mix.pattern.complement().bits(), 1.0 - mix.p}};
  return d;
}

}  // namespace mtc
