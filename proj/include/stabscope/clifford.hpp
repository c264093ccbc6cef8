#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabscope/pauli.hpp"
#include "stabscope/random.hpp"

namespace stabscope {

enum class GateKind { H, S, CNOT };

struct Gate {
  GateKind kind;
  int control;     // the acted-on qubit for H and S
  int target = -1; // CNOT only

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string gate_name(GateKind kind);
GateKind parse_gate_name(const std::string& name);

// Ordered gate list; gates are applied in list order.
class CliffordCircuit {
 public:
  explicit CliffordCircuit(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  void h(int q);
  void s(int q);
  void cnot(int control, int target);
  void append(const Gate& gate);
  void append(const CliffordCircuit& other);

  CliffordCircuit inverse() const;

  friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;

 private:
  void check_qubit(int q) const;
  int n_;
  std::vector<Gate> gates_;
};

// G P G^dagger.
PauliString conjugate(const PauliString& p, const Gate& gate);
PauliString conjugate(const PauliString& p, const CliffordCircuit& circuit);

// A Clifford up to global phase, given by the signed images of X_i and Z_i.
struct CliffordMap {
  int n = 0;
  std::vector<PauliString> x_images;
  std::vector<PauliString> z_images;

  static CliffordMap identity(int n);
  static CliffordMap of(const CliffordCircuit& circuit);
  // Throws std::invalid_argument unless the images satisfy the canonical
  // commutation relations and are Hermitian.
  void validate() const;

  friend bool operator==(const CliffordMap&, const CliffordMap&) = default;
};

// Uniform over the Clifford group modulo phases: a uniform symplectic basis plus
// 2n uniform sign bits.
CliffordMap sample_clifford_map(int n, Rng& rng);

// Gate decomposition whose conjugation action equals the map.
CliffordCircuit synthesize(const CliffordMap& map);

CliffordCircuit sample_random_clifford(int n, Rng& rng);

}  // namespace stabscope
