#include "stabscope/certification.hpp"

#include <algorithm>
#include <cmath>

#include "stabscope/error.hpp"
#include "stabscope/experiments.hpp"
#include "stabscope/oracles.hpp"
#include "stabscope/sre.hpp"

namespace stabscope {

CertificationPlan::CertificationPlan(const StateVector& target, int threads)
    : target_(target), expectations_(pauli_expectations(target, threads)) {
  const double scale = std::ldexp(1.0, -target.n());
  double total = 0.0;
  for (std::size_t i = 0; i < expectations_.values.size(); ++i) {
    const double b2 = expectations_.values[i] * expectations_.values[i];
    if (b2 < kSamplingZeroThreshold) continue;
    total += b2 * scale;
    support_.push_back(i);
    cumulative_.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-9) throw NumericalError("CertificationPlan: distribution does not sum to 1");
  for (auto& c : cumulative_) c /= total;
  cumulative_.back() = 1.0;
}

double CertificationPlan::probability(std::size_t index) const {
  const double b = expectations_.values.at(index);
  return b * b * std::ldexp(1.0, -n());
}

PauliString CertificationPlan::sample(Rng& rng) const {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), support_.size() - 1);
  const std::size_t index = support_[k];
  const std::uint64_t z = index & qubit_mask(n());
  return PauliString::hermitian(n(), index >> n(), z);
}

PauliString sample_pauli(const CertificationPlan& plan, Rng& rng) { return plan.sample(rng); }

double pauli_expectation(const LabState& rho, const PauliString& sigma) {
  if (const auto* pure = std::get_if<StateVector>(&rho)) return expectation(*pure, sigma);
  const auto& dep = std::get<DepolarizedState>(rho);
  require(dep.p >= 0.0 && dep.p <= 1.0, "pauli_expectation: depolarizing parameter outside [0, 1]");
  if (sigma.is_identity()) return sigma.sign();
  return (1.0 - dep.p) * expectation(dep.state, sigma);
}

double exact_fidelity(const LabState& rho, const StateVector& psi) {
  if (const auto* pure = std::get_if<StateVector>(&rho)) return fidelity(*pure, psi);
  const auto& dep = std::get<DepolarizedState>(rho);
  return (1.0 - dep.p) * fidelity(dep.state, psi) + dep.p * std::ldexp(1.0, -psi.n());
}

CertificationOutcome estimate_fidelity(const CertificationPlan& plan, const LabState& rho, int m, Rng& rng) {
  require(m >= 1, "estimate_fidelity: need at least one sample");
  const int rho_n = std::holds_alternative<StateVector>(rho) ? std::get<StateVector>(rho).n()
                                                             : std::get<DepolarizedState>(rho).state.n();
  require(rho_n == plan.n(), "estimate_fidelity: qubit count mismatch");
  std::vector<double> ratios(m);
  for (int i = 0; i < m; ++i) {
    const PauliString sigma = plan.sample(rng);
    ratios[i] = pauli_expectation(rho, sigma) / plan.expectations().at(sigma);
  }
  const MeanStderr ms = mean_and_stderr(ratios);
  CertificationOutcome out;
  out.estimate = ms.mean;
  out.std_error = ms.std_error;
  out.samples = m;
  out.target_m2 = std::max(0.0, sre(squared(plan.expectations()), 2.0).value);
  out.nontrivial_regime = out.target_m2 <= std::log(4.0 / 3.0);
  return out;
}

SampleBudget sample_budget_bounds(double epsilon, double delta, double m2, double m0) {
  require(epsilon > 0.0 && delta > 0.0 && delta < 1.0, "sample_budget_bounds: need epsilon > 0, 0 < delta < 1");
  const double log_term = std::log(2.0 / delta);
  return SampleBudget{2.0 / (epsilon * epsilon) * log_term * std::exp(m2),
                      64.0 / std::pow(epsilon, 4) * log_term * std::exp(m0)};
}

double proxy_fidelity_bound(double m2) { return 2.0 * std::sqrt(std::max(0.0, 1.0 - std::exp(-std::max(0.0, m2)))); }

CertificationOutcome certify_via_closest_stabilizer(const StateVector& psi, const LabState& rho, int m, Rng& rng,
                                                   int threads) {
  guard(psi.n() <= kStabilizerEnumerationMaxQubits, "certify_via_closest_stabilizer: n exceeds enumeration limit");
  const OracleResult closest = stabilizer_fidelity(psi, threads);
  const StateVector proxy = closest.closest->to_statevector();
  const CertificationPlan plan(proxy, threads);
  CertificationOutcome out = estimate_fidelity(plan, rho, m, rng);
  out.via_proxy = true;
  out.proxy = closest.closest;
  out.proxy_fidelity = closest.value;
  out.target_m2 = std::max(0.0, sre(pauli_spectrum(psi, threads), 2.0).value);
  out.proxy_bound = proxy_fidelity_bound(out.target_m2);
  out.nontrivial_regime = out.target_m2 <= std::log(4.0 / 3.0);
  return out;
}

}  // namespace stabscope
