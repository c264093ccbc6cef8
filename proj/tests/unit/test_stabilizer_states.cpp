#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles/dense.hpp"
#include "stabscope/error.hpp"
#include "stabscope/stabilizer_states.hpp"
#include "stabscope/tableau.hpp"

using namespace stabscope;

namespace {

std::vector<long long> key(std::vector<Complex> v) {
  for (const auto& a : v)
    if (std::abs(a) > 1e-9) {
      const Complex ph = std::conj(a) / std::abs(a);
      for (auto& b : v) b *= ph;
      break;
    }
  std::vector<long long> k;
  for (const auto& a : v) {
    k.push_back(std::llround(a.real() * 1e6));
    k.push_back(std::llround(a.imag() * 1e6));
  }
  return k;
}

}  // namespace

TEST(StabilizerStates, CountsMatchClosedForm) {
  const std::uint64_t expected[] = {0, 6, 60, 1080, 36720};
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t count = 0;
    enumerate_stabilizer_states(n, [&](const StabilizerStateDescriptor&) { ++count; });
    EXPECT_EQ(count, expected[n]);
    EXPECT_EQ(stabilizer_state_count(n), expected[n]);
  }
  std::uint64_t five = 0;
  for (const auto& c : affine_cosets(5)) five += (std::uint64_t{1} << c.k) << quadratic_bits(c.k);
  EXPECT_EQ(five, 2423520u);
  EXPECT_EQ(stabilizer_state_count(5), 2423520u);
}

TEST(StabilizerStates, EnumerationEqualsCliffordOrbit) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<long long>> orbit, enumerated;
    for (const auto& s : oracle::stabilizer_orbit(n)) orbit.insert(key(s));
    enumerate_stabilizer_states(n, [&](const StabilizerStateDescriptor& d) {
      const StateVector s = d.to_statevector();
      enumerated.insert(key({s.amplitudes().begin(), s.amplitudes().end()}));
    });
    EXPECT_EQ(orbit.size(), stabilizer_state_count(n));
    EXPECT_EQ(enumerated, orbit);
  }
}

TEST(StabilizerStates, DescriptorsAreDistinctAndOrdered) {
  std::vector<StabilizerStateDescriptor> all;
  enumerate_stabilizer_states(3, [&](const StabilizerStateDescriptor& d) { all.push_back(d); });
  std::set<StabilizerStateDescriptor> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
}

TEST(StabilizerStates, OverlapMatchesInnerProduct) {
  Rng rng(1);
  const StateVector psi = haar_random_state(3, rng);
  enumerate_stabilizer_states(3, [&](const StabilizerStateDescriptor& d) {
    const Complex expected = inner_product(d.to_statevector(), psi);
    EXPECT_LT(std::abs(descriptor_overlap(d, psi) - expected), 1e-13);
  });
}

TEST(StabilizerStates, CosetOverlapVisitorMatchesDescriptors) {
  Rng rng(2);
  const StateVector psi = haar_random_state(3, rng);
  for (const auto& c : affine_cosets(3)) {
    for_each_coset_overlap(c, psi, [&](std::uint64_t l, std::uint64_t q, Complex o) {
      EXPECT_LT(std::abs(o - descriptor_overlap(make_descriptor(c, l, q), psi)), 1e-13);
    });
  }
}

TEST(StabilizerStates, CosetBasisIsCanonical) {
  for (const auto& c : affine_cosets(4)) {
    std::uint64_t pivots = 0;
    for (auto b : c.basis) pivots |= b & (~b + 1);
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
      const std::uint64_t p = c.basis[i] & (~c.basis[i] + 1);
      for (std::size_t j = 0; j < c.basis.size(); ++j)
        if (j != i) EXPECT_EQ(c.basis[j] & p, 0u);
    }
    EXPECT_EQ(c.shift & pivots, 0u);
  }
}

TEST(Tableau, ZeroStateGenerators) {
  const Tableau t = tableau_new(3);
  EXPECT_EQ(t.generators()[1].to_string(), "IZI");
  const StateVector s = tableau_to_statevector(t);
  EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
}

TEST(Tableau, HadamardOnQubitZeroGivesXGenerator) {
  CliffordCircuit c(2);
  c.h(0);
  const Tableau t = apply_clifford(tableau_new(2), c);
  EXPECT_EQ(t.generators()[0].to_string(), "XI");
}

TEST(Tableau, StatevectorMatchesCircuitOnZero) {
  Rng rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const CliffordCircuit c = sample_random_clifford(n, rng);
      const StateVector from_tableau = tableau_to_statevector(apply_clifford(tableau_new(n), c));
      const StateVector direct = apply_clifford(StateVector::zero(n), c);
      EXPECT_NEAR(fidelity(from_tableau, direct), 1.0, 1e-12);
    }
  }
}

TEST(Tableau, GroupElementsStabilizeTheState) {
  Rng rng(4);
  const int n = 4;
  const Tableau t = apply_clifford(tableau_new(n), sample_random_clifford(n, rng));
  const StateVector psi = tableau_to_statevector(t);
  const auto group = stabilizer_group(t);
  ASSERT_EQ(group.size(), 16u);
  std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
  for (const auto& g : group) {
    EXPECT_TRUE(g.is_hermitian());
    EXPECT_NEAR(expectation(psi, g), 1.0, 1e-12);
    distinct.insert({g.x(), g.z()});
  }
  EXPECT_EQ(distinct.size(), 16u);
}

TEST(Tableau, RejectsInvalidGenerators) {
  EXPECT_THROW(Tableau(2, {pauli_parse("XI"), pauli_parse("ZI")}), std::invalid_argument);
  EXPECT_THROW(Tableau(2, {pauli_parse("ZZ"), pauli_parse("ZZ").negated()}), std::invalid_argument);
  EXPECT_THROW(Tableau(2, {pauli_parse("ZZ")}), std::invalid_argument);
}
