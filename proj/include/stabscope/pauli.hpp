#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stabscope {

// The operator i^phase_power X^x_mask Z^z_mask on n qubits.
// Bit i of either mask acts on qubit i; in text form qubit 0 is the leftmost
// character. A Hermitian string with sign s has phase_power = |x&z| + (s<0 ? 2 : 0).
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;
  PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_power = 0);

  static PauliString identity(int n);
  static PauliString hermitian(int n, std::uint64_t x_mask, std::uint64_t z_mask,
                               bool negative = false);

  int n() const { return n_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t z() const { return z_; }
  int phase_power() const { return phase_; }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const;
  // +1 or -1; throws std::logic_error on a non-Hermitian string.
  int sign() const;
  int weight() const;

  PauliString negated() const;
  PauliString unsigned_form() const { return hermitian(n_, x_, z_); }

  // "XIZ", "-XY", "iZ", "-iX".
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

// Accepts only the letters I, X, Y, Z; the result is Hermitian with sign +1.
PauliString pauli_parse(std::string_view text);

PauliString pauli_mul(const PauliString& p, const PauliString& q);

bool commutes(const PauliString& p, const PauliString& q);

inline PauliString operator*(const PauliString& p, const PauliString& q) { return pauli_mul(p, q); }

inline std::uint64_t qubit_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace stabscope
