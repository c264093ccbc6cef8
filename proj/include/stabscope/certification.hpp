#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "stabscope/pauli.hpp"
#include "stabscope/random.hpp"
#include "stabscope/spectrum.hpp"
#include "stabscope/stabilizer_states.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

// Strings with beta^2 below this are never sampled.
constexpr double kSamplingZeroThreshold = 1e-20;

// Importance distribution P(sigma) = 2^{-n} beta_sigma(psi)^2 for a target psi.
class CertificationPlan {
 public:
  explicit CertificationPlan(const StateVector& target, int threads = 1);

  int n() const { return target_.n(); }
  const StateVector& target() const { return target_; }
  const PauliExpectations& expectations() const { return expectations_; }
  double probability(std::size_t index) const;

  PauliString sample(Rng& rng) const;

 private:
  StateVector target_;
  PauliExpectations expectations_;
  std::vector<std::size_t> support_;  // indices with beta^2 >= threshold
  std::vector<double> cumulative_;    // over support_, last entry 1
};

PauliString sample_pauli(const CertificationPlan& plan, Rng& rng);

// (1 - p)|phi><phi| + p I / 2^n
struct DepolarizedState {
  StateVector state;
  double p = 0.0;
};

using LabState = std::variant<StateVector, DepolarizedState>;

double pauli_expectation(const LabState& rho, const PauliString& sigma);
// <psi|rho|psi>
double exact_fidelity(const LabState& rho, const StateVector& psi);

struct CertificationOutcome {
  double estimate = 0.0;  // F^ (possibly of the proxy state)
  double std_error = 0.0;
  int samples = 0;
  bool via_proxy = false;
  double proxy_bound = 0.0;  // |F(rho, psi) - F(rho, psi')| <= proxy_bound
  double target_m2 = 0.0;
  bool nontrivial_regime = true;  // M2(psi) <= ln(4/3)
  double proxy_fidelity = 1.0;    // |<psi|psi'>|^2
  std::optional<StabilizerStateDescriptor> proxy;
};

// Mean of beta_sigma(rho) / beta_sigma(psi) over m draws from the plan.
CertificationOutcome estimate_fidelity(const CertificationPlan& plan, const LabState& rho, int m, Rng& rng);

struct SampleBudget {
  // As published: 2 eps^{-2} ln(2/delta) e^{M2} >= m >= 64 eps^{-4} ln(2/delta) e^{M0}.
  double upper_m2_expression = 0.0;
  double lower_m0_expression = 0.0;
};

SampleBudget sample_budget_bounds(double epsilon, double delta, double m2, double m0);

// 2 sqrt(1 - e^{-M2})
double proxy_fidelity_bound(double m2);

// Estimates the fidelity with the closest stabilizer state psi' (n <= 5), which
// needs only Clifford-measurable strings, and reports the bound on the proxy error.
CertificationOutcome certify_via_closest_stabilizer(const StateVector& psi, const LabState& rho, int m, Rng& rng,
                                                   int threads = 1);

}  // namespace stabscope
