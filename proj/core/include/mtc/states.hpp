// The two state families under study: a pure state supported on a basis
// string and its bitwise complement with a relative phase between the two
// branches, and the classical mixture with the same z-basis statistics.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mtc/basis.hpp"

namespace mtc {

using cplx = std::complex<double>;

// Largest qubit count for which full 2^n amplitude arrays are materialized.
// Analytic paths work up to n = 64.
inline constexpr int kDenseCap = 24;

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sqrt(p)|pattern> + e^{i phi} sqrt(1-p)|complement>, 0 < p < 1.
struct TwoComponentState {
  BasisString pattern;
  double p;
  double phi;  // stored normalized to [0, 2pi)

  TwoComponentState(BasisString pattern, double p, double phi);
  int n() const { return pattern.n(); }
};

// p|pattern><pattern| + (1-p)|complement><complement|, 0 < p < 1.
struct ClassicalTwoMixture {
  BasisString pattern;
  double p;

  ClassicalTwoMixture(BasisString pattern, double p);
  int n() const { return pattern.n(); }
};

class StateVector {
 public:
  StateVector(int n, std::vector<cplx> amplitudes);

  int n() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  const cplx& operator[](std::uint64_t i) const { return amps_[i]; }

  double norm_sq() const;

 private:
  int n_;
  std::vector<cplx> amps_;
};

// Sparse probability distribution over n-bit outcome strings.
struct OutcomeDistribution {
  int n = 0;
  std::vector<std::pair<std::uint64_t, double>> probs;  // (index, mass)

  double total() const;
};

// Normalize an angle into [0, 2pi).
double wrap_angle(double phi);

StateVector build_statevector(const TwoComponentState& state);
OutcomeDistribution pure_z_distribution(const TwoComponentState& state);
OutcomeDistribution mixture_z_distribution(const ClassicalTwoMixture& mix);

}  // namespace mtc
