#include "mtc/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace mtc {

StateVector apply_hadamard_all(const StateVector& sv) {
  const int n = sv.n();
  const std::uint64_t dim = sv.dim();
  std::vector<cplx> a = sv.amplitudes();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    const std::uint64_t stride = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
      for (std::uint64_t i = base; i < base + stride; ++i) {
        const cplx lo = a[i];
        const cplx hi = a[i + stride];
        a[i] = (lo + hi) * inv_sqrt2;
        a[i + stride] = (lo - hi) * inv_sqrt2;
      }
    }
  }
  return StateVector(n, std::move(a));
}

StateVector apply_phase_shift(const StateVector& sv, int qubit, int reference_bit) {
  const int n = sv.n();
  if (qubit < 1 || qubit > n) {
    throw std::out_of_range("apply_phase_shift: qubit index out of range");
  }
  if (reference_bit != 0 && reference_bit != 1) {
    throw std::invalid_argument("apply_phase_shift: reference_bit must be 0 or 1");
  }
  const std::uint64_t bit_mask = std::uint64_t{1} << (n - qubit);
  std::vector<cplx> a = sv.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    const int b = static_cast<int>((i & bit_mask) != 0);
    if (b != reference_bit) {
      a[i] = cplx{-a[i].imag(), a[i].real()};  // multiply by i, exact
    }
  }
  return StateVector(n, std::move(a));
}

ParityDistribution analytic_post_hadamard(const TwoComponentState& state) {
  ParityDistribution d;
  d.n = state.n();
  const double amp = std::sqrt(state.p * (1.0 - state.p));
  d.p_even = 0.5 + amp * std::cos(state.phi);
  d.p_odd = 1.0 - d.p_even;
  const double sector = std::exp2(static_cast<double>(d.n - 1));
  d.per_string_even = d.p_even / sector;
  d.per_string_odd = d.p_odd / sector;
  return d;
}

ParityDistribution analytic_mixture_post_hadamard(const ClassicalTwoMixture& mix) {
  ParityDistribution d;
  d.n = mix.n();
  d.p_even = 0.5;
  d.p_odd = 0.5;
  d.per_string_even = std::exp2(static_cast<double>(-d.n));
  d.per_string_odd = d.per_string_even;
  return d;
}

ParityDistribution x_basis_distribution(const TwoComponentState& state) {
  // H maps the x eigenbasis to the z basis, so the distributions coincide
  // bit for bit; the outcome string counts |-> results instead of |1>s.
  return analytic_post_hadamard(state);
}

}  // namespace mtc
