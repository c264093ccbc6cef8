#pragma once

#include <vector>

#include "stabscope/clifford.hpp"
#include "stabscope/pauli.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

// Stabilizer generators of an n-qubit pure stabilizer state.
class Tableau {
 public:
  // Validates: n independent, pairwise commuting, Hermitian generators.
  Tableau(int n, std::vector<PauliString> generators);

  // Generators Z_0, ..., Z_{n-1} of |0...0>.
  static Tableau zero_state(int n);

  int n() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }

  void apply(const Gate& gate);
  void apply(const CliffordCircuit& circuit);

 private:
  int n_;
  std::vector<PauliString> generators_;
};

Tableau tableau_new(int n);
Tableau apply_clifford(Tableau tableau, const CliffordCircuit& circuit);

// Dense amplitudes, phase fixed so the first nonzero amplitude is real positive.
StateVector tableau_to_statevector(const Tableau& tableau);

// All 2^n signed group elements in Gray-code order starting from the identity.
std::vector<PauliString> stabilizer_group(const Tableau& tableau);

}  // namespace stabscope
