#include <gtest/gtest.h>

#include <cmath>

#include "oracles/dense.hpp"
#include "stabscope/error.hpp"
#include "stabscope/hamiltonian.hpp"
#include "stabscope/models.hpp"

using namespace stabscope;

namespace {

// e^{-iHt} psi by a truncated Taylor series with repeated squaring of the step.
std::vector<Complex> taylor_evolve(const Hamiltonian& h, const StateVector& psi, double t) {
  const std::size_t d = h.dim();
  const int steps = 64;
  const double dt = t / steps;
  std::vector<Complex> v(psi.amplitudes().begin(), psi.amplitudes().end());
  for (int s = 0; s < steps; ++s) {
    std::vector<Complex> term = v, acc = v;
    for (int k = 1; k < 30; ++k) {
      std::vector<Complex> next(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) next[i] += h.at(i, j) * term[j];
      for (auto& x : next) x *= Complex(0, -dt) / static_cast<double>(k);
      term = next;
      for (std::size_t i = 0; i < d; ++i) acc[i] += term[i];
    }
    v = acc;
  }
  return v;
}

}  // namespace

TEST(Hamiltonian, GueIsHermitian) {
  Rng rng(1);
  const Hamiltonian h = sample_gue(4, rng);
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) EXPECT_EQ(h.at(i, j), std::conj(h.at(j, i)));
}

TEST(Hamiltonian, GueTraceNormalization) {
  Rng rng(2);
  const int n = 4, samples = 400;
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Hamiltonian h = sample_gue(n, rng);
    for (const auto& v : h.matrix) total += std::norm(v);
  }
  EXPECT_NEAR(total / samples, 17.0, 17.0 * 0.02);
}

TEST(Hamiltonian, SemicircleRadiusNearTwo) {
  Rng rng(3);
  const Propagator p(sample_gue(8, rng));
  const auto& e = p.eigenvalues();
  EXPECT_GT(e.front(), -2.2);
  EXPECT_LT(e.back(), 2.2);
  EXPECT_LT(e.front(), -1.8);
  EXPECT_GT(e.back(), 1.8);
}

TEST(Hamiltonian, EvolutionMatchesTaylorSeries) {
  Rng rng(4);
  const Hamiltonian h = sample_gue(3, rng);
  const StateVector psi = haar_random_state(3, rng);
  for (double t : {0.0, 0.3, 1.7}) {
    const StateVector out = evolve(psi, h, t);
    const auto ref = taylor_evolve(h, psi, t);
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_LT(std::abs(out[i] - ref[i]), 1e-10);
  }
}

TEST(Hamiltonian, EvolutionComposes) {
  Rng rng(5);
  const Propagator p(sample_gue(4, rng));
  const StateVector psi = StateVector::zero(4);
  const StateVector a = p.evolve(p.evolve(psi, 0.4), 0.9);
  const StateVector b = p.evolve(psi, 1.3);
  EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
}

TEST(Hamiltonian, ShortTimeFidelityDecay) {
  double total = 0.0;
  const int samples = 40;
  for (int s = 0; s < samples; ++s) {
    const EvolutionRecord r = build_gue_state(6, 0.1, 1000 + s);
    total += fidelity(r.state, StateVector::zero(6));
  }
  EXPECT_NEAR(total / samples, 0.99, 0.002);
}

TEST(Hamiltonian, GuardsLargeN) { Rng rng(6); EXPECT_THROW(sample_gue(13, rng), GuardError); }
