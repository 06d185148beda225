#include "mtc/oracle.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace mtc::oracle {

namespace {

void butterfly_stride(std::vector<cplx>& a, std::uint64_t begin, std::uint64_t count,
                      std::uint64_t stride, std::uint64_t step) {
  // One Hadamard pass over the pairs (i, i + stride*step) within a row or
  // column slice; `step` is 1 for rows, dim for columns.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t base = 0; base < count; base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const std::uint64_t lo_idx = begin + i * step;
      const std::uint64_t hi_idx = begin + (i + stride) * step;
      const cplx lo = a[lo_idx];
      const cplx hi = a[hi_idx];
      a[lo_idx] = (lo + hi) * inv_sqrt2;
      a[hi_idx] = (lo - hi) * inv_sqrt2;
    }
  }
}

}  // namespace

DenseDensityOperator::DenseDensityOperator(int n, std::vector<cplx> row_major)
    : n_(n), m_(std::move(row_major)) {
  if (n < 1 || n > kDensityCap) {
    throw capacity_error("DenseDensityOperator: n = " + std::to_string(n) +
                         " exceeds density cap " + std::to_string(kDensityCap));
  }
  if (m_.size() != dim() * dim()) {
    throw std::invalid_argument("DenseDensityOperator: need 4^n entries");
  }
}

double DenseDensityOperator::trace_real() const {
  double t = 0.0;
  for (std::uint64_t i = 0; i < dim(); ++i) t += at(i, i).real();
  return t;
}

double DenseDensityOperator::hermiticity_defect() const {
  double worst = 0.0;
  for (std::uint64_t r = 0; r < dim(); ++r) {
    for (std::uint64_t c = r; c < dim(); ++c) {
      worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return worst;
}

double DenseDensityOperator::smallest_eigenvalue() const {
  using Mat = Eigen::MatrixXcd;
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::Map<const Mat> m(m_.data(), d, d);  // transpose irrelevant for eigenvalues
  Mat herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DenseDensityOperator::validate() const {
  if (hermiticity_defect() > 1e-12) {
    throw std::runtime_error("density operator: Hermiticity defect above 1e-12");
  }
  if (std::abs(trace_real() - 1.0) > 1e-12) {
    throw std::runtime_error("density operator: trace deviates from 1");
  }
  if (smallest_eigenvalue() < -1e-10) {
    throw std::runtime_error("density operator: negative eigenvalue beyond tolerance");
  }
}

DenseDensityOperator densify_mixture(const ClassicalTwoMixture& mix) {
  const int n = mix.n();
  if (n > kDensityCap) {
    throw capacity_error("densify_mixture: n exceeds density cap " +
                         std::to_string(kDensityCap));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<cplx> m(dim * dim, cplx{0.0, 0.0});
  m[mix.pattern.bits() * dim + mix.pattern.bits()] = mix.p;
  const std::uint64_t comp = mix.pattern.complement().bits();
  m[comp * dim + comp] = 1.0 - mix.p;
  return DenseDensityOperator(n, std::move(m));
}

DenseDensityOperator evolve_density(const DenseDensityOperator& rho,
                                    const UnitaryDescription& u) {
  const int n = rho.n();
  const std::uint64_t dim = rho.dim();
  std::vector<cplx> m = rho.data();
  if (std::holds_alternative<HadamardAll>(u)) {
    // H is real symmetric, so U rho U^dagger = (H rho) H applied per axis.
    for (int q = 0; q < n; ++q) {
      const std::uint64_t stride = std::uint64_t{1} << q;
      for (std::uint64_t col = 0; col < dim; ++col) {
        butterfly_stride(m, col, dim, stride, dim);  // row index varies
      }
      for (std::uint64_t row = 0; row < dim; ++row) {
        butterfly_stride(m, row * dim, dim, stride, 1);  // column index varies
      }
    }
  } else {
    const auto& ps = std::get<PhaseShift>(u);
    if (ps.qubit < 1 || ps.qubit > n) {
      throw std::out_of_range("evolve_density: qubit index out of range");
    }
    const std::uint64_t bit_mask = std::uint64_t{1} << (n - ps.qubit);
    auto shifted = [&](std::uint64_t idx) {
      return static_cast<int>((idx & bit_mask) != 0) != ps.reference_bit;
    };
    for (std::uint64_t r = 0; r < dim; ++r) {
      for (std::uint64_t c = 0; c < dim; ++c) {
        cplx v = m[r * dim + c];
        if (shifted(r)) v = cplx{-v.imag(), v.real()};        // * i
        if (shifted(c)) v = cplx{v.imag(), -v.real()};        // * conj(i)
        m[r * dim + c] = v;
      }
    }
  }
  return DenseDensityOperator(n, std::move(m));
}

FullOutcomeTable enumerate_outcomes(const StateVector& sv) {
  FullOutcomeTable t;
  t.n = sv.n();
  t.probs.resize(sv.dim());
  for (std::uint64_t i = 0; i < sv.dim(); ++i) {
    t.probs[i] = std::norm(sv[i]);
    if (std::popcount(i) % 2 == 0) t.p_even += t.probs[i];
  }
  return t;
}

FullOutcomeTable enumerate_outcomes(const DenseDensityOperator& rho) {
  FullOutcomeTable t;
  t.n = rho.n();
  t.probs.resize(rho.dim());
  for (std::uint64_t i = 0; i < rho.dim(); ++i) {
    t.probs[i] = rho.at(i, i).real();
    if (std::popcount(i) % 2 == 0) t.p_even += t.probs[i];
  }
  return t;
}

double cross_check(const ParityDistribution& analytic, const FullOutcomeTable& table) {
  if (analytic.n != table.n) {
    throw std::invalid_argument("cross_check: qubit count mismatch");
  }
  double worst = std::abs(analytic.p_even - table.p_even);
  for (std::uint64_t i = 0; i < table.probs.size(); ++i) {
    const bool even = std::popcount(i) % 2 == 0;
    const double expected = even ? analytic.per_string_even : analytic.per_string_odd;
    worst = std::max(worst, std::abs(expected - table.probs[i]));
  }
  return worst;
}

}  // namespace mtc::oracle
