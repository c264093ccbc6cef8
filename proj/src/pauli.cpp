#include "stabscope/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "stabscope/error.hpp"

namespace stabscope {

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_power)
    : n_(n), x_(x_mask), z_(z_mask), phase_(((phase_power % 4) + 4) % 4) {
  require(n >= 0 && n <= kMaxQubits, "PauliString: qubit count out of range");
  require(((x_mask | z_mask) & ~qubit_mask(n)) == 0, "PauliString: mask has bits beyond n");
}

PauliString PauliString::identity(int n) { return PauliString(n, 0, 0, 0); }

PauliString PauliString::hermitian(int n, std::uint64_t x_mask, std::uint64_t z_mask, bool negative) {
  return PauliString(n, x_mask, z_mask, std::popcount(x_mask & z_mask) + (negative ? 2 : 0));
}

bool PauliString::is_hermitian() const { return ((phase_ - std::popcount(x_ & z_)) & 1) == 0; }

int PauliString::sign() const {
  if (!is_hermitian()) throw std::logic_error("PauliString::sign on non-Hermitian string");
  return ((phase_ - std::popcount(x_ & z_)) & 3) == 0 ? 1 : -1;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

PauliString PauliString::negated() const { return PauliString(n_, x_, z_, phase_ + 2); }

std::string PauliString::to_string() const {
  int rel = ((phase_ - std::popcount(x_ & z_)) % 4 + 4) % 4;
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[rel];
  for (int q = 0; q < n_; ++q) {
    bool xb = (x_ >> q) & 1, zb = (z_ >> q) & 1;
    out.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
  }
  return out;
}

PauliString pauli_parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(PauliString::kMaxQubits))
    throw ParseError("pauli_parse: more than 64 qubits");
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      default: throw ParseError("pauli_parse: invalid character in '" + std::string(text) + "'");
    }
  }
  return PauliString::hermitian(static_cast<int>(text.size()), x, z);
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  require(p.n() == q.n(), "pauli_mul: qubit count mismatch");
  // Z^{z1} X^{x2} = (-1)^{z1.x2} X^{x2} Z^{z1}
  int phase = p.phase_power() + q.phase_power() + 2 * std::popcount(p.z() & q.x());
  return PauliString(p.n(), p.x() ^ q.x(), p.z() ^ q.z(), phase);
}

bool commutes(const PauliString& p, const PauliString& q) {
  require(p.n() == q.n(), "commutes: qubit count mismatch");
  return (std::popcount((p.x() & q.z()) ^ (p.z() & q.x())) & 1) == 0;
}

}  // namespace stabscope
