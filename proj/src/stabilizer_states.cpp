#include "stabscope/stabilizer_states.hpp"

#include <cmath>

#include "stabscope/error.hpp"

namespace stabscope {

std::uint64_t AffineCoset::point(std::uint64_t coords) const {
  std::uint64_t y = shift;
  for (int i = 0; i < k; ++i)
    if ((coords >> i) & 1) y ^= basis[i];
  return y;
}

Complex StabilizerStateDescriptor::coefficient(std::uint64_t coords) const {
  static const Complex kI[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  int quad = 0;
  for (int i = 0; i < k; ++i)
    if ((coords >> i) & 1) quad ^= std::popcount(quadratic[i] & coords) & 1;
  const int power = (std::popcount(linear & coords) + 2 * quad) & 3;
  return kI[power] / std::sqrt(static_cast<double>(std::uint64_t{1} << k));
}

StateVector StabilizerStateDescriptor::to_statevector() const {
  guard(n <= StateVector::kMaxQubits, "descriptor: n exceeds dense limit");
  std::vector<Complex> amps(std::size_t{1} << n);
  const AffineCoset c = coset();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) amps[c.point(x)] = coefficient(x);
  return StateVector(n, std::move(amps));
}

std::uint64_t stabilizer_state_count(int n) {
  require(n >= 0 && n <= 12, "stabilizer_state_count: n out of range");
  std::uint64_t count = std::uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) count *= (std::uint64_t{1} << k) + 1;
  return count;
}

std::vector<AffineCoset> affine_cosets(int n) {
  guard(n >= 1 && n <= kStabilizerEnumerationMaxQubits, "affine_cosets: n exceeds enumeration limit");
  std::vector<AffineCoset> out;
  for (int k = 0; k <= n; ++k) {
    // Pivot sets as k-subsets of {0..n-1} in increasing numeric order.
    for (std::uint64_t pivots = 0; pivots < (std::uint64_t{1} << n); ++pivots) {
      if (std::popcount(pivots) != k) continue;
      std::vector<int> pivot_list;
      for (int b = 0; b < n; ++b)
        if ((pivots >> b) & 1) pivot_list.push_back(b);
      // Free positions for basis vector i: non-pivot bits above p_i.
      std::vector<std::vector<int>> free_bits(k);
      int total_free = 0;
      for (int i = 0; i < k; ++i) {
        for (int b = pivot_list[i] + 1; b < n; ++b)
          if (!((pivots >> b) & 1)) free_bits[i].push_back(b);
        total_free += static_cast<int>(free_bits[i].size());
      }
      std::vector<int> non_pivot;
      for (int b = 0; b < n; ++b)
        if (!((pivots >> b) & 1)) non_pivot.push_back(b);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_free); ++code) {
        std::vector<std::uint64_t> basis(k);
        int used = 0;
        for (int i = 0; i < k; ++i) {
          basis[i] = std::uint64_t{1} << pivot_list[i];
          for (int b : free_bits[i])
            if ((code >> used++) & 1) basis[i] |= std::uint64_t{1} << b;
        }
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << non_pivot.size()); ++s) {
          std::uint64_t shift = 0;
          for (std::size_t j = 0; j < non_pivot.size(); ++j)
            if ((s >> j) & 1) shift |= std::uint64_t{1} << non_pivot[j];
          out.push_back(AffineCoset{n, k, basis, shift});
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> unpack_quadratic(int k, std::uint64_t code) {
  std::vector<std::uint64_t> rows(k, 0);
  int b = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      if ((code >> b++) & 1) rows[i] |= std::uint64_t{1} << j;
  return rows;
}

StabilizerStateDescriptor make_descriptor(const AffineCoset& coset, std::uint64_t linear,
                                          std::uint64_t quadratic_code) {
  return StabilizerStateDescriptor{coset.n, coset.k, coset.basis, coset.shift, linear,
                                   unpack_quadratic(coset.k, quadratic_code)};
}

void enumerate_stabilizer_states(int n, const std::function<void(const StabilizerStateDescriptor&)>& visit) {
  for (const AffineCoset& c : affine_cosets(n)) {
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << c.k); ++l)
      for (std::uint64_t q = 0; q < (std::uint64_t{1} << quadratic_bits(c.k)); ++q)
        visit(make_descriptor(c, l, q));
  }
}

Complex descriptor_overlap(const StabilizerStateDescriptor& eta, const StateVector& psi) {
  require(eta.n == psi.n(), "descriptor_overlap: qubit count mismatch");
  const AffineCoset c = eta.coset();
  Complex s = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << eta.k); ++x)
    s += std::conj(eta.coefficient(x)) * psi[c.point(x)];
  return s;
}

}  // namespace stabscope
