#pragma once

#include <vector>

#include "stabscope/random.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

// Dense Hermitian matrix, column-major.
struct Hamiltonian {
  int n = 0;
  std::vector<Complex> matrix;

  std::size_t dim() const { return std::size_t{1} << n; }
  Complex at(std::size_t row, std::size_t col) const { return matrix[col * dim() + row]; }
};

constexpr int kDenseHamiltonianMaxQubits = 12;

// H = (A + A^dagger)/2 with complex Gaussian A, scaled so E|H_ij|^2 = (2^n + 1)/4^n;
// then E tr H^2 = 2^n + 1 and the spectrum is a semicircle of radius about 2.
Hamiltonian sample_gue(int n, Rng& rng);

// Eigendecomposition computed once and reused for every time point.
class Propagator {
 public:
  // Throws NumericalError if the eigensolver fails.
  explicit Propagator(const Hamiltonian& h);

  int n() const { return n_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  // e^{-iHt}|psi>
  StateVector evolve(const StateVector& psi, double t) const;

 private:
  int n_;
  std::vector<double> eigenvalues_;
  std::vector<Complex> eigenvectors_;  // column-major
};

StateVector evolve(const StateVector& psi, const Hamiltonian& h, double t);

}  // namespace stabscope
