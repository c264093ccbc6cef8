#include "stabscope/hamiltonian.hpp"

#include <lapacke.h>

#include <cmath>

#include "stabscope/error.hpp"

namespace stabscope {

Hamiltonian sample_gue(int n, Rng& rng) {
  guard(n >= 1 && n <= kDenseHamiltonianMaxQubits, "sample_gue: n exceeds dense Hamiltonian limit");
  const std::size_t d = std::size_t{1} << n;
  const double d2 = static_cast<double>(d);
  // E|A_ij|^2 = 2 (d + 1) / d^2, split evenly between real and imaginary parts.
  const double sigma = std::sqrt((d2 + 1.0) / (d2 * d2));
  std::vector<Complex> a(d * d);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t col = 0; col < d; ++col) {
      const double re = rng.normal();
      const double im = rng.normal();
      a[col * d + row] = Complex(sigma * re, sigma * im);
    }
  Hamiltonian h{n, std::vector<Complex>(d * d)};
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t col = 0; col < d; ++col)
      h.matrix[col * d + row] = 0.5 * (a[col * d + row] + std::conj(a[row * d + col]));
  for (std::size_t i = 0; i < d; ++i) h.matrix[i * d + i] = h.matrix[i * d + i].real();
  return h;
}

Propagator::Propagator(const Hamiltonian& h) : n_(h.n) {
  const std::size_t d = h.dim();
  require(h.matrix.size() == d * d, "Propagator: matrix size mismatch");
  eigenvectors_ = h.matrix;
  eigenvalues_.assign(d, 0.0);
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(d),
                     reinterpret_cast<lapack_complex_double*>(eigenvectors_.data()),
                     static_cast<lapack_int>(d), eigenvalues_.data());
  if (info != 0) throw NumericalError("Propagator: eigensolver failed with info " + std::to_string(info));
}

StateVector Propagator::evolve(const StateVector& psi, double t) const {
  require(psi.n() == n_, "Propagator: qubit count mismatch");
  const std::size_t d = psi.dim();
  std::vector<Complex> c(d);
  for (std::size_t k = 0; k < d; ++k) {
    Complex s = 0.0;
    const Complex* v = &eigenvectors_[k * d];
    for (std::size_t i = 0; i < d; ++i) s += std::conj(v[i]) * psi[i];
    c[k] = s * std::polar(1.0, -eigenvalues_[k] * t);
  }
  std::vector<Complex> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Complex* v = &eigenvectors_[k * d];
    const Complex ck = c[k];
    for (std::size_t i = 0; i < d; ++i) out[i] += v[i] * ck;
  }
  double norm = 0.0;
  for (const auto& v : out) norm += std::norm(v);
  if (std::abs(norm - 1.0) > 1e-9) throw NumericalError("Propagator: evolution lost normalization");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& v : out) v *= scale;
  return StateVector(n_, std::move(out));
}

StateVector evolve(const StateVector& psi, const Hamiltonian& h, double t) {
  return Propagator(h).evolve(psi, t);
}

}  // namespace stabscope
