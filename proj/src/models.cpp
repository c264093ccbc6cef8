#include "stabscope/models.hpp"

#include <cmath>

#include "stabscope/error.hpp"

namespace stabscope {

std::string model_name(Model m) {
  switch (m) {
    case Model::clifford_t: return "clifford_t";
    case Model::random_basis: return "random_basis";
    case Model::gue: return "gue";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  if (name == "clifford_t") return Model::clifford_t;
  if (name == "random_basis") return Model::random_basis;
  if (name == "gue") return Model::gue;
  throw ParseError("unknown model '" + name + "'");
}

CliffordTTrajectory::CliffordTTrajectory(int n, std::uint64_t seed)
    : n_(n), rng_(seed), state_(StateVector::zero(n)) {
  state_.apply(sample_random_clifford(n_, rng_));
}

void CliffordTTrajectory::step() {
  state_.apply_t(0);
  state_.apply(sample_random_clifford(n_, rng_));
  ++t_count_;
}

EvolutionRecord build_clifford_t_state(int n, int n_t, std::uint64_t seed) {
  require(n_t >= 0, "build_clifford_t_state: negative T count");
  CliffordTTrajectory traj(n, seed);
  for (int k = 0; k < n_t; ++k) traj.step();
  return EvolutionRecord{Model::clifford_t, n, static_cast<double>(n_t), seed, traj.state()};
}

RandomBasisCircuit::RandomBasisCircuit(int n, int depth, std::uint64_t seed) : n_(n), depth_(depth) {
  require(depth >= 1, "RandomBasisCircuit: depth must be positive");
  Rng rng(seed);
  layers_.reserve(depth + 1);
  for (int k = 0; k <= depth; ++k) layers_.push_back(sample_random_clifford(n, rng));
}

double RandomBasisCircuit::angle(double t, int depth) { return 2.0 * t / std::sqrt(static_cast<double>(depth)); }

StateVector RandomBasisCircuit::state_at(double t) const {
  const double theta = angle(t, depth_);
  StateVector psi = StateVector::zero(n_);
  psi.apply(layers_[0]);
  for (int k = 1; k <= depth_; ++k) {
    psi.apply_rz(0, theta);
    psi.apply(layers_[k]);
  }
  return psi;
}

EvolutionRecord build_random_basis_state(int n, double t, int depth, std::uint64_t seed) {
  RandomBasisCircuit circuit(n, depth, seed);
  return EvolutionRecord{Model::random_basis, n, t, seed, circuit.state_at(t)};
}

EvolutionRecord build_gue_state(int n, double t, std::uint64_t seed) {
  Rng rng(seed);
  const Hamiltonian h = sample_gue(n, rng);
  return EvolutionRecord{Model::gue, n, t, seed, evolve(StateVector::zero(n), h, t)};
}

}  // namespace stabscope
