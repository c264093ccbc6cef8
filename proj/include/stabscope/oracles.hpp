#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabscope/stabilizer_states.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

constexpr int kRobustnessMaxQubits = 3;

struct OracleResult {
  std::string measure;
  int n = 0;
  double value = 0.0;
  // Closest stabilizer state (fidelity and min-relative entropy).
  std::optional<StabilizerStateDescriptor> closest;
  // Affine decomposition psi = sum_i x_i eta_i at the optimum (robustness).
  std::vector<std::pair<StabilizerStateDescriptor, double>> decomposition;
  // The witness reproduces the value when recomputed from scratch.
  bool certified = false;
  std::uint64_t states_visited = 0;
};

// max over stabilizer states of |<eta|psi>|^2 by exhaustive enumeration, n <= 5.
// Ties within 1e-12 go to the lexicographically smaller descriptor, so the
// witness does not depend on the thread count. Stops early once F reaches 1 - 1e-12.
OracleResult stabilizer_fidelity(const StateVector& psi, int threads = 1);

// -ln of the stabilizer fidelity.
OracleResult min_relative_entropy(const StateVector& psi, int threads = 1);

// ln of min ||x||_1 over affine decompositions into stabilizer states
// (matched on all 4^n Pauli expectations), n <= 3.
OracleResult log_free_robustness(const StateVector& psi);

// n ln 2 minus the log of the number of Pauli strings with beta^2 within 1e-9 of 1.
OracleResult stabilizer_nullity(const StateVector& psi, int threads = 1);

struct BoundCheck {
  std::string name;
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double slack = 0.0;  // lhs - rhs
};

constexpr double kBoundTolerance = 1e-9;

// Rows: min-relative entropy >= (alpha-1)/(2 alpha) M_alpha for each alpha > 1 (n <= 5);
// robustness >= M_{1/2}/2 (n <= 3); nullity >= M_0.
std::vector<BoundCheck> check_bounds(const StateVector& psi, const std::vector<double>& alphas, int threads = 1);

}  // namespace stabscope
