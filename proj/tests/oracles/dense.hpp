#pragma once

// Reference implementations built from explicit matrices. They share no code
// paths with the library beyond the StateVector container.

#include <complex>
#include <cstdint>
#include <vector>

#include "stabscope/clifford.hpp"
#include "stabscope/pauli.hpp"
#include "stabscope/statevector.hpp"

namespace oracle {

using stabscope::Complex;

// Row-major d x d.
struct Matrix {
  std::size_t dim = 0;
  std::vector<Complex> a;

  static Matrix identity(std::size_t d);
  Complex& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

Matrix multiply(const Matrix& x, const Matrix& y);
Matrix adjoint(const Matrix& x);
Matrix kron(const Matrix& x, const Matrix& y);
std::vector<Complex> apply(const Matrix& m, const std::vector<Complex>& v);
double max_abs_diff(const Matrix& x, const Matrix& y);

// Single-qubit letter matrices composed by Kronecker products; qubit 0 is the
// least significant index bit.
Matrix pauli_matrix(const stabscope::PauliString& p);
Matrix single_qubit_gate(int n, int q, const Matrix& g);
Matrix cnot_matrix(int n, int control, int target);
Matrix gate_matrix(int n, const stabscope::Gate& g);
Matrix circuit_unitary(const stabscope::CliffordCircuit& c);

// beta_sigma = <psi|P_sigma|psi> by matrix-vector products, index (x << n) | z.
std::vector<double> naive_expectations(const stabscope::StateVector& psi);

// All n-qubit stabilizer states (up to global phase) by breadth-first search
// over the orbit of |0...0> under H, S, CNOT matrices. Phase-normalized so the
// first nonzero amplitude is real positive.
std::vector<std::vector<Complex>> stabilizer_orbit(int n);

double brute_force_stabilizer_fidelity(const stabscope::StateVector& psi,
                                       const std::vector<std::vector<Complex>>& orbit);

}  // namespace oracle
