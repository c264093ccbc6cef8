#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles/dense.hpp"
#include "stabscope/error.hpp"
#include "stabscope/oracles.hpp"
#include "stabscope/spectrum.hpp"
#include "stabscope/sre.hpp"

using namespace stabscope;

namespace {

StateVector t_state() {
  StateVector s = StateVector::zero(1);
  s.apply_h(0);
  s.apply_t(0);
  return s;
}

}  // namespace

TEST(StabilizerFidelity, TState) {
  const OracleResult r = stabilizer_fidelity(t_state());
  EXPECT_NEAR(r.value, (2.0 + std::sqrt(2.0)) / 4.0, 1e-14);
  EXPECT_TRUE(r.certified);
  ASSERT_TRUE(r.closest.has_value());
  EXPECT_NEAR(fidelity(r.closest->to_statevector(), t_state()), r.value, 1e-14);
}

TEST(StabilizerFidelity, MatchesBruteForceOrbit) {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    const auto orbit = oracle::stabilizer_orbit(n);
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector psi = haar_random_state(n, rng);
      EXPECT_NEAR(stabilizer_fidelity(psi).value, oracle::brute_force_stabilizer_fidelity(psi, orbit), 1e-12);
    }
  }
}

TEST(StabilizerFidelity, ThreadsAgree) {
  Rng rng(2);
  const StateVector psi = haar_random_state(4, rng);
  const OracleResult a = stabilizer_fidelity(psi, 1), b = stabilizer_fidelity(psi, 3);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.closest, b.closest);
}

TEST(StabilizerFidelity, StabilizerInputShortCircuits) {
  Rng rng(3);
  const StateVector psi = apply_clifford(StateVector::zero(4), sample_random_clifford(4, rng));
  const OracleResult r = stabilizer_fidelity(psi);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_LT(r.states_visited, stabilizer_state_count(4));
}

TEST(MinRelativeEntropy, TState) {
  EXPECT_NEAR(min_relative_entropy(t_state()).value, -std::log((2.0 + std::sqrt(2.0)) / 4.0), 1e-14);
}

TEST(Robustness, TStateIsLnSqrtTwo) {
  const OracleResult r = log_free_robustness(t_state());
  EXPECT_NEAR(r.value, std::log(std::sqrt(2.0)), 1e-9);
  EXPECT_TRUE(r.certified);
}

TEST(Robustness, StabilizerStateIsZero) {
  Rng rng(4);
  const StateVector psi = apply_clifford(StateVector::zero(3), sample_random_clifford(3, rng));
  EXPECT_NEAR(log_free_robustness(psi).value, 0.0, 1e-9);
}

TEST(Robustness, DecompositionReconstructsState) {
  Rng rng(5);
  const StateVector psi = haar_random_state(2, rng);
  const OracleResult r = log_free_robustness(psi);
  ASSERT_TRUE(r.certified);
  double l1 = 0.0;
  std::vector<double> recon(16, 0.0);
  for (const auto& [d, w] : r.decomposition) {
    l1 += std::abs(w);
    const auto e = pauli_expectations(d.to_statevector()).values;
    for (std::size_t i = 0; i < 16; ++i) recon[i] += w * e[i];
  }
  const auto target = pauli_expectations(psi).values;
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(recon[i], target[i], 1e-8);
  EXPECT_NEAR(std::log(l1), r.value, 1e-8);
  EXPECT_THROW(log_free_robustness(StateVector::zero(4)), GuardError);
}

TEST(Nullity, CountsUnitExpectations) {
  const double ln2 = std::numbers::ln2;
  EXPECT_NEAR(stabilizer_nullity(t_state()).value, ln2, 1e-14);
  EXPECT_NEAR(stabilizer_nullity(StateVector::zero(3)).value, 0.0, 1e-14);
  const StateVector two = tensor(t_state(), StateVector::zero(2));
  EXPECT_NEAR(stabilizer_nullity(two).value, ln2, 1e-14);
}

TEST(Bounds, HoldOnRandomStates) {
  Rng rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector psi = haar_random_state(3, rng);
    for (const BoundCheck& b : check_bounds(psi, {2.0, 3.0, 4.0})) EXPECT_TRUE(b.satisfied) << b.name << " " << b.slack;
  }
}

TEST(Bounds, ReportsExpectedRows) {
  const auto rows = check_bounds(t_state(), {2.0});
  std::set<std::string> names;
  for (const auto& b : rows) names.insert(b.name);
  EXPECT_TRUE(names.count("min_relative_entropy"));
  EXPECT_TRUE(names.count("log_free_robustness"));
  EXPECT_TRUE(names.count("stabilizer_nullity"));
}
