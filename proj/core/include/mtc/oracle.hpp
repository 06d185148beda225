// Brute-force ground truth: dense density-operator evolution and exhaustive
// outcome enumeration, used to cross-check every analytic shortcut.

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mtc/gates.hpp"
#include "mtc/states.hpp"

namespace mtc::oracle {

inline constexpr int kDensityCap = 10;

class DenseDensityOperator {
 public:
  DenseDensityOperator(int n, std::vector<cplx> row_major);

  int n() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  cplx& at(std::uint64_t row, std::uint64_t col) { return m_[row * dim() + col]; }
  const cplx& at(std::uint64_t row, std::uint64_t col) const {
    return m_[row * dim() + col];
  }
  const std::vector<cplx>& data() const { return m_; }

  double trace_real() const;
  double hermiticity_defect() const;  // max |rho - rho^dagger| entrywise
  double smallest_eigenvalue() const;

  // Throws if Hermiticity (1e-12), trace (1e-12), or PSD (>= -1e-10) fail.
  void validate() const;

 private:
  int n_;
  std::vector<cplx> m_;
};

struct FullOutcomeTable {
  int n = 0;
  std::vector<double> probs;  // 2^n entries
  double p_even = 0.0;
};

struct HadamardAll {};
struct PhaseShift {
  int qubit = 1;
  int reference_bit = 0;
};
using UnitaryDescription = std::variant<HadamardAll, PhaseShift>;

DenseDensityOperator densify_mixture(const ClassicalTwoMixture& mix);

// U rho U^dagger via the same gate kernels applied to columns and
// (conjugated) rows.
DenseDensityOperator evolve_density(const DenseDensityOperator& rho,
                                    const UnitaryDescription& u);

FullOutcomeTable enumerate_outcomes(const StateVector& sv);
FullOutcomeTable enumerate_outcomes(const DenseDensityOperator& rho);

// Max absolute deviation between the analytic parity distribution and the
// exhaustively enumerated one, over p_even and both per-sector per-string
// probabilities.
double cross_check(const ParityDistribution& analytic, const FullOutcomeTable& table);

}  // namespace mtc::oracle
