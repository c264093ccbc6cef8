#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabscope/clifford.hpp"
#include "stabscope/hamiltonian.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

enum class Model { clifford_t, random_basis, gue };

std::string model_name(Model m);
Model parse_model(const std::string& name);

struct EvolutionRecord {
  Model model;
  int n;
  double parameter;  // n_t, or t
  std::uint64_t seed;
  StateVector state;
};

// Random Clifford on |0...0>, then n_t rounds of (T on qubit 0, fresh random Clifford).
// The state after k rounds equals build_clifford_t_state(n, k, seed).state.
class CliffordTTrajectory {
 public:
  CliffordTTrajectory(int n, std::uint64_t seed);
  int t_count() const { return t_count_; }
  const StateVector& state() const { return state_; }
  void step();

 private:
  int n_;
  Rng rng_;
  int t_count_ = 0;
  StateVector state_;
};

EvolutionRecord build_clifford_t_state(int n, int n_t, std::uint64_t seed);

// U_0 prod_{k=1}^d (R_z(theta) U_k)|0...0> with theta = 2t/sqrt(d), rotation on qubit 0.
// The Clifford layers are sampled once and replayed for every t.
class RandomBasisCircuit {
 public:
  RandomBasisCircuit(int n, int depth, std::uint64_t seed);
  int n() const { return n_; }
  int depth() const { return depth_; }
  static double angle(double t, int depth);
  StateVector state_at(double t) const;

 private:
  int n_;
  int depth_;
  std::vector<CliffordCircuit> layers_;  // d + 1 circuits, applied in order
};

EvolutionRecord build_random_basis_state(int n, double t, int depth, std::uint64_t seed);

// e^{-iHt}|0...0> with H drawn from the scaled GUE.
EvolutionRecord build_gue_state(int n, double t, std::uint64_t seed);

}  // namespace stabscope
