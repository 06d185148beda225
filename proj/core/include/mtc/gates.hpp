// Local operations: the all-qubit Hadamard (dense butterfly and analytic
// parity form) and the single-qubit e^{i pi/2} phase shift.

#pragma once

#include "mtc/states.hpp"

namespace mtc {

// Probability split between even- and odd-parity outcome sectors after the
// all-qubit Hadamard. Each sector holds exactly 2^{n-1} strings, uniformly
// weighted within the sector.
struct ParityDistribution {
  int n = 0;
  double p_even = 0.0;
  double p_odd = 0.0;
  double per_string_even = 0.0;
  double per_string_odd = 0.0;
};

// H applied to every qubit: n in-place butterfly passes, cost n * 2^n.
StateVector apply_hadamard_all(const StateVector& sv);

// |i> -> |i>, |i-bar> -> i * |i-bar> on one qubit. `reference_bit` is the
// branch left unshifted; every amplitude whose basis string differs from it
// at `qubit` (1-based) picks up the factor i.
StateVector apply_phase_shift(const StateVector& sv, int qubit, int reference_bit);

// Parity statistics of H^{x n} |state>, valid for any n <= 64. Independent
// of state.pattern: the per-term signs of the post-Hadamard expansion
// square away under z-basis measurement.
ParityDistribution analytic_post_hadamard(const TwoComponentState& state);

// The mixture comes out flat: every string 2^{-n}, p_even = 1/2 exactly.
ParityDistribution analytic_mixture_post_hadamard(const ClassicalTwoMixture& mix);

// Measuring each qubit in the x basis gives the same statistics as Hadamard
// followed by z measurement, with |-> counts in place of |1> counts.
ParityDistribution x_basis_distribution(const TwoComponentState& state);

}  // namespace mtc
