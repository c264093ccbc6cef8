#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "stabscope/statevector.hpp"

namespace stabscope {

// Affine subspace t + span(basis) of F2^n. The basis is in canonical reduced
// form: basis[i] has lowest set bit p_i (p_0 < p_1 < ...), no other basis
// vector has bit p_i set, and the shift is zero on every p_i.
struct AffineCoset {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> basis;
  std::uint64_t shift = 0;

  // Point t + sum_i x_i basis[i] for coordinates x in F2^k.
  std::uint64_t point(std::uint64_t coords) const;
};

// |eta> = 2^{-k/2} sum_x i^{l.x} (-1)^{x^T Q x} |t + Rx>, with Q upper
// triangular including the diagonal. Every n-qubit stabilizer state has
// exactly one descriptor.
struct StabilizerStateDescriptor {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> basis;
  std::uint64_t shift = 0;
  std::uint64_t linear = 0;
  // quadratic[i] holds Q_ij as bit j, for j >= i.
  std::vector<std::uint64_t> quadratic;

  AffineCoset coset() const { return AffineCoset{n, k, basis, shift}; }
  Complex coefficient(std::uint64_t coords) const;
  StateVector to_statevector() const;

  auto operator<=>(const StabilizerStateDescriptor&) const = default;
  bool operator==(const StabilizerStateDescriptor&) const = default;
};

constexpr int kStabilizerEnumerationMaxQubits = 5;

// 2^n prod_{k=1}^n (2^k + 1).
std::uint64_t stabilizer_state_count(int n);

std::vector<AffineCoset> affine_cosets(int n);

// Number of Q bits for a k-dimensional coset.
constexpr int quadratic_bits(int k) { return k * (k + 1) / 2; }
std::vector<std::uint64_t> unpack_quadratic(int k, std::uint64_t code);

StabilizerStateDescriptor make_descriptor(const AffineCoset& coset, std::uint64_t linear,
                                          std::uint64_t quadratic_code);

// Visits all descriptors in canonical order; n <= 5.
void enumerate_stabilizer_states(int n, const std::function<void(const StabilizerStateDescriptor&)>& visit);

// <eta|psi>
Complex descriptor_overlap(const StabilizerStateDescriptor& eta, const StateVector& psi);

// Calls visit(linear, quadratic_code, <eta|psi>) for every phase assignment on
// the coset. The sum over l uses a per-bit butterfly: O(k 2^k) per Q.
template <class Visitor>
void for_each_coset_overlap(const AffineCoset& coset, const StateVector& psi, Visitor&& visit) {
  const int k = coset.k;
  const std::size_t size = std::size_t{1} << k;
  const double norm = 1.0 / std::sqrt(static_cast<double>(size));
  std::vector<Complex> gathered(size), work(size);
  for (std::size_t x = 0; x < size; ++x) gathered[x] = psi[coset.point(x)] * norm;
  // Pair list (i, j) with i <= j in the order used by the quadratic code.
  std::vector<std::uint64_t> pair_mask;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pair_mask.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
  const std::uint64_t q_count = std::uint64_t{1} << quadratic_bits(k);
  for (std::uint64_t q = 0; q < q_count; ++q) {
    for (std::size_t x = 0; x < size; ++x) {
      int parity = 0;
      for (std::size_t b = 0; b < pair_mask.size(); ++b)
        if ((q >> b) & 1) parity ^= (x & pair_mask[b]) == pair_mask[b];
      work[x] = parity ? -gathered[x] : gathered[x];
    }
    // sum_x (-i)^{|l & x|} c_x, one bit at a time.
    for (int bit = 0; bit < k; ++bit) {
      const std::size_t h = std::size_t{1} << bit;
      for (std::size_t x = 0; x < size; ++x) {
        if (x & h) continue;
        const Complex a = work[x], b = work[x | h];
        work[x] = a + b;
        work[x | h] = a + Complex(b.imag(), -b.real());
      }
    }
    for (std::uint64_t l = 0; l < size; ++l) visit(l, q, work[l]);
  }
}

}  // namespace stabscope
