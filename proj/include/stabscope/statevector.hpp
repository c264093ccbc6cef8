#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "stabscope/clifford.hpp"
#include "stabscope/pauli.hpp"
#include "stabscope/random.hpp"

namespace stabscope {

using Complex = std::complex<double>;

// Dense pure state on n qubits; basis index bit i is qubit i.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;
  static constexpr double kNormTolerance = 1e-12;

  StateVector() = default;
  // Validates length 2^n and unit norm within kNormTolerance.
  StateVector(int n, std::vector<Complex> amplitudes);

  static StateVector zero(int n);
  static StateVector basis(int n, std::uint64_t index);

  int n() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  void apply_h(int q);
  void apply_s(int q);
  void apply_cnot(int control, int target);
  // diag(1, e^{-i pi/4})
  void apply_t(int q);
  // diag(e^{-i theta/2}, e^{i theta/2})
  void apply_rz(int q, double theta);
  void apply(const Gate& gate);
  void apply(const CliffordCircuit& circuit);
  // P|psi> for the full operator i^p X^x Z^z.
  void apply_pauli(const PauliString& p);

 private:
  void check_qubit(int q) const;
  int n_ = 0;
  std::vector<Complex> amps_;
};

StateVector apply_t_gate(StateVector state, int qubit);
StateVector apply_rz(StateVector state, int qubit, double theta);
StateVector apply_clifford(StateVector state, const CliffordCircuit& circuit);

// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);
// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);
// a on the low qubits, b on the high qubits.
StateVector tensor(const StateVector& a, const StateVector& b);
// <psi|P|psi> for Hermitian P; throws NumericalError if the imaginary part exceeds 1e-9.
double expectation(const StateVector& psi, const PauliString& p);

StateVector haar_random_state(int n, Rng& rng);

}  // namespace stabscope
