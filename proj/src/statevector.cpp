#include "stabscope/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "stabscope/error.hpp"

namespace stabscope {

StateVector::StateVector(int n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  require(n >= 0 && n <= kMaxQubits, "StateVector: qubit count out of range");
  require(amps_.size() == (std::size_t{1} << n), "StateVector: amplitude count is not 2^n");
  const double norm = norm_squared();
  if (!(std::abs(norm - 1.0) <= kNormTolerance))
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
}

StateVector StateVector::zero(int n) { return basis(n, 0); }

StateVector StateVector::basis(int n, std::uint64_t index) {
  guard(n >= 0 && n <= kMaxQubits, "StateVector: qubit count exceeds dense limit");
  require(index < (std::uint64_t{1} << n), "StateVector: basis index out of range");
  std::vector<Complex> a(std::size_t{1} << n);
  a[index] = 1.0;
  return StateVector(n, std::move(a));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::check_qubit(int q) const { require(q >= 0 && q < n_, "StateVector: qubit out of range"); }

void StateVector::apply_h(int q) {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  const double r = std::numbers::sqrt2 / 2.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Complex a = amps_[i], b = amps_[i | bit];
    amps_[i] = r * (a + b);
    amps_[i | bit] = r * (a - b);
  }
}

void StateVector::apply_s(int q) {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & bit) amps_[i] = Complex(-amps_[i].imag(), amps_[i].real());
}

void StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  require(control != target, "StateVector: CNOT control equals target");
  const std::size_t c = std::size_t{1} << control, t = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
}

void StateVector::apply_t(int q) {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  const Complex phase = std::polar(1.0, -std::numbers::pi / 4.0);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & bit) amps_[i] *= phase;
}

void StateVector::apply_rz(int q, double theta) {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  const Complex lo = std::polar(1.0, -theta / 2.0), hi = std::polar(1.0, theta / 2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & bit) ? hi : lo;
}

void StateVector::apply(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::H: apply_h(gate.control); break;
    case GateKind::S: apply_s(gate.control); break;
    case GateKind::CNOT: apply_cnot(gate.control, gate.target); break;
  }
}

void StateVector::apply(const CliffordCircuit& circuit) {
  require(circuit.n() == n_, "StateVector: circuit qubit count mismatch");
  for (const Gate& g : circuit.gates()) apply(g);
}

void StateVector::apply_pauli(const PauliString& p) {
  require(p.n() == n_, "StateVector: Pauli qubit count mismatch");
  static const Complex kI[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  const Complex global = kI[p.phase_power()];
  std::vector<Complex> out(amps_.size());
  const std::uint64_t x = p.x(), z = p.z();
  for (std::size_t y = 0; y < amps_.size(); ++y) {
    const bool odd = std::popcount(z & y) & 1;
    out[y ^ x] = odd ? -global * amps_[y] : global * amps_[y];
  }
  amps_ = std::move(out);
}

StateVector apply_t_gate(StateVector state, int qubit) {
  state.apply_t(qubit);
  return state;
}

StateVector apply_rz(StateVector state, int qubit, double theta) {
  state.apply_rz(qubit, theta);
  return state;
}

StateVector apply_clifford(StateVector state, const CliffordCircuit& circuit) {
  state.apply(circuit);
  return state;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require(a.n() == b.n(), "inner_product: qubit count mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

StateVector tensor(const StateVector& a, const StateVector& b) {
  guard(a.n() + b.n() <= StateVector::kMaxQubits, "tensor: result exceeds dense limit");
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i) out[i | (j << a.n())] = a[i] * b[j];
  double norm = 0.0;
  for (auto& v : out) norm += std::norm(v);
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& v : out) v *= scale;
  return StateVector(a.n() + b.n(), std::move(out));
}

double expectation(const StateVector& psi, const PauliString& p) {
  require(p.is_hermitian(), "expectation: Pauli string must be Hermitian");
  StateVector image = psi;
  image.apply_pauli(p);
  const Complex e = inner_product(psi, image);
  if (std::abs(e.imag()) > 1e-9) throw NumericalError("expectation: non-real Pauli expectation");
  return e.real();
}

StateVector haar_random_state(int n, Rng& rng) {
  guard(n >= 0 && n <= StateVector::kMaxQubits, "haar_random_state: n exceeds dense limit");
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& v : a) {
    const double re = rng.normal();
    const double im = rng.normal();
    v = Complex(re, im);
    norm += std::norm(v);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& v : a) v *= scale;
  return StateVector(n, std::move(a));
}

}  // namespace stabscope
