#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mtc/rng.hpp"
#include "mtc/states.hpp"

using namespace mtc;

namespace {
constexpr double kPi = std::numbers::pi;

double prob_of(const OutcomeDistribution& d, std::uint64_t idx) {
  for (const auto& [i, mass] : d.probs) {
    if (i == idx) return mass;
  }
  return 0.0;
}
}  // namespace

TEST_CASE("build_statevector places the two branches") {
  SUBCASE("equal single-qubit superposition") {
    const auto sv = build_statevector(
        TwoComponentState(BasisString::from_string("0"), 0.5, 0.0));
    CHECK(sv[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sv[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sv[0].imag() == 0.0);
  }
  SUBCASE("Bell state") {
    const auto sv = build_statevector(
        TwoComponentState(BasisString::from_string("01"), 0.5, 0.0));
    CHECK(sv[0b01].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(sv[0b10].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(std::abs(sv[0b00]) == 0.0);
    CHECK(std::abs(sv[0b11]) == 0.0);
  }
  SUBCASE("phase lands on the complement branch") {
    const auto sv = build_statevector(
        TwoComponentState(BasisString::from_string("000"), 0.25, kPi / 2.0));
    CHECK(sv[0b000].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sv[0b111].real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sv[0b111].imag() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  }
}

TEST_CASE("build_statevector normalization over the parameter grid") {
  for (int n = 1; n <= 10; ++n) {
    for (double p : {0.01, 0.25, 0.5, 0.75, 0.99}) {
      for (double phi : {0.0, 1.0, kPi, 5.0}) {
        const auto sv = build_statevector(TwoComponentState(BasisString(n, 1), p, phi));
        CHECK(std::abs(sv.norm_sq() - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("z distributions") {
  SUBCASE("mixture") {
    const auto d =
        mixture_z_distribution(ClassicalTwoMixture(BasisString::from_string("00"), 0.3));
    CHECK(prob_of(d, 0b00) == 0.3);
    CHECK(prob_of(d, 0b11) == 0.7);
    CHECK(prob_of(d, 0b01) == 0.0);
  }
  SUBCASE("single qubit mixture") {
    const auto d =
        mixture_z_distribution(ClassicalTwoMixture(BasisString::from_string("1"), 0.5));
    CHECK(prob_of(d, 1) == 0.5);
    CHECK(prob_of(d, 0) == 0.5);
  }
  SUBCASE("four qubits") {
    const auto d = mixture_z_distribution(
        ClassicalTwoMixture(BasisString::from_string("0101"), 0.9));
    CHECK(prob_of(d, 0b0101) == 0.9);
    CHECK(prob_of(d, 0b1010) == doctest::Approx(0.1).epsilon(1e-15));
  }
  SUBCASE("pure state: phase invisible in z") {
    const auto d = pure_z_distribution(
        TwoComponentState(BasisString::from_string("010"), 0.5, kPi / 3.0));
    CHECK(prob_of(d, 0b010) == 0.5);
    CHECK(prob_of(d, 0b101) == 0.5);
  }
}

TEST_CASE("pure and mixture z distributions coincide exactly") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng::at(11, trial * 3) % 12);
    const auto bits = rng::at(11, trial * 3 + 1) & BasisString::mask(n);
    const double p = 0.01 + 0.98 * rng::unit(rng::at(11, trial * 3 + 2));
    const double phi = 2.0 * kPi * rng::unit(rng::at(13, trial));
    const BasisString pat(n, bits);
    const auto dp = pure_z_distribution(TwoComponentState(pat, p, phi));
    const auto dm = mixture_z_distribution(ClassicalTwoMixture(pat, p));
    REQUIRE(dp.probs.size() == dm.probs.size());
    for (size_t i = 0; i < dp.probs.size(); ++i) {
      CHECK(dp.probs[i].first == dm.probs[i].first);
      CHECK(dp.probs[i].second == dm.probs[i].second);  // bit-exact
    }
  }
}

TEST_CASE("boundary weights are rejected") {
  const auto pat = BasisString::from_string("01");
  CHECK_THROWS_AS(TwoComponentState(pat, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(TwoComponentState(pat, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ClassicalTwoMixture(pat, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ClassicalTwoMixture(pat, 1.0), std::invalid_argument);
}

TEST_CASE("phi normalizes into [0, 2pi)") {
  const auto pat = BasisString::from_string("0");
  CHECK(TwoComponentState(pat, 0.5, -kPi / 2.0).phi ==
        doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-15));
  CHECK(TwoComponentState(pat, 0.5, 2.0 * kPi).phi == 0.0);
  CHECK(TwoComponentState(pat, 0.5, 7.0).phi ==
        doctest::Approx(7.0 - 2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("dense cap enforced with a named limit") {
  const TwoComponentState big(BasisString(30, 0), 0.5, 0.0);
  CHECK_THROWS_WITH_AS(build_statevector(big),
                       doctest::Contains(std::to_string(kDenseCap).c_str()),
                       capacity_error);
}
