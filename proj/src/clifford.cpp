#include "stabscope/clifford.hpp"

#include <bit>
#include <stdexcept>

#include "stabscope/error.hpp"

namespace stabscope {

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

GateKind parse_gate_name(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "S") return GateKind::S;
  if (name == "CNOT") return GateKind::CNOT;
  throw ParseError("unknown gate '" + name + "'");
}

void CliffordCircuit::check_qubit(int q) const {
  require(q >= 0 && q < n_, "CliffordCircuit: qubit index out of range");
}

void CliffordCircuit::h(int q) { append(Gate{GateKind::H, q}); }
void CliffordCircuit::s(int q) { append(Gate{GateKind::S, q}); }
void CliffordCircuit::cnot(int control, int target) { append(Gate{GateKind::CNOT, control, target}); }

void CliffordCircuit::append(const Gate& gate) {
  check_qubit(gate.control);
  if (gate.kind == GateKind::CNOT) {
    check_qubit(gate.target);
    require(gate.control != gate.target, "CliffordCircuit: CNOT control equals target");
  }
  gates_.push_back(gate);
}

void CliffordCircuit::append(const CliffordCircuit& other) {
  require(other.n_ == n_, "CliffordCircuit: qubit count mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

CliffordCircuit CliffordCircuit::inverse() const {
  CliffordCircuit inv(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    if (it->kind == GateKind::S) {
      for (int k = 0; k < 3; ++k) inv.gates_.push_back(*it);
    } else {
      inv.gates_.push_back(*it);
    }
  }
  return inv;
}

namespace {

// Hermitian-form sign bit: phase = |x&z| + 2r.
bool sign_bit(const PauliString& p) { return p.sign() < 0; }

}  // namespace

PauliString conjugate(const PauliString& p, const Gate& gate) {
  require(p.is_hermitian(), "conjugate: Pauli string must be Hermitian");
  std::uint64_t x = p.x(), z = p.z();
  bool r = sign_bit(p);
  const std::uint64_t a = std::uint64_t{1} << gate.control;
  const bool xa = x & a, za = z & a;
  switch (gate.kind) {
    case GateKind::H:
      r ^= xa && za;
      x = (x & ~a) | (za ? a : 0);
      z = (z & ~a) | (xa ? a : 0);
      break;
    case GateKind::S:
      r ^= xa && za;
      if (xa) z ^= a;
      break;
    case GateKind::CNOT: {
      const std::uint64_t b = std::uint64_t{1} << gate.target;
      const bool xb = x & b, zb = z & b;
      r ^= xa && zb && !(xb ^ za);
      if (xa) x ^= b;
      if (zb) z ^= a;
      break;
    }
  }
  return PauliString::hermitian(p.n(), x, z, r);
}

PauliString conjugate(const PauliString& p, const CliffordCircuit& circuit) {
  PauliString out = p;
  for (const Gate& g : circuit.gates()) out = conjugate(out, g);
  return out;
}

CliffordMap CliffordMap::identity(int n) {
  CliffordMap m;
  m.n = n;
  for (int q = 0; q < n; ++q) {
    m.x_images.push_back(PauliString::hermitian(n, std::uint64_t{1} << q, 0));
    m.z_images.push_back(PauliString::hermitian(n, 0, std::uint64_t{1} << q));
  }
  return m;
}

CliffordMap CliffordMap::of(const CliffordCircuit& circuit) {
  CliffordMap m = identity(circuit.n());
  for (auto& p : m.x_images) p = conjugate(p, circuit);
  for (auto& p : m.z_images) p = conjugate(p, circuit);
  return m;
}

void CliffordMap::validate() const {
  require(static_cast<int>(x_images.size()) == n && static_cast<int>(z_images.size()) == n,
          "CliffordMap: wrong number of images");
  for (int i = 0; i < n; ++i) {
    require(x_images[i].is_hermitian() && z_images[i].is_hermitian(), "CliffordMap: non-Hermitian image");
    for (int j = 0; j < n; ++j) {
      require(commutes(x_images[i], x_images[j]) && commutes(z_images[i], z_images[j]),
              "CliffordMap: images violate commutation relations");
      require(commutes(x_images[i], z_images[j]) == (i != j),
              "CliffordMap: images violate commutation relations");
    }
  }
}

namespace {

struct SymplecticVector {
  std::uint64_t x = 0, z = 0;
  bool zero() const { return x == 0 && z == 0; }
  SymplecticVector& operator^=(const SymplecticVector& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
};

int form(const SymplecticVector& a, const SymplecticVector& b) {
  return std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1;
}

// Projection onto the symplectic complement of the chosen hyperbolic pairs.
SymplecticVector project(SymplecticVector u, const std::vector<SymplecticVector>& vs,
                         const std::vector<SymplecticVector>& ws) {
  const SymplecticVector original = u;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (form(original, ws[j])) u ^= vs[j];
    if (form(original, vs[j])) u ^= ws[j];
  }
  return u;
}

}  // namespace

CliffordMap sample_clifford_map(int n, Rng& rng) {
  require(n >= 1 && n <= PauliString::kMaxQubits, "sample_clifford_map: n out of range");
  std::vector<SymplecticVector> vs, ws;
  auto random_vector = [&] { return SymplecticVector{rng.bits(n), rng.bits(n)}; };
  for (int i = 0; i < n; ++i) {
    SymplecticVector v;
    do {
      v = project(random_vector(), vs, ws);
    } while (v.zero());
    SymplecticVector w;
    do {
      w = project(random_vector(), vs, ws);
    } while (form(v, w) == 0);
    vs.push_back(v);
    ws.push_back(w);
  }
  CliffordMap m;
  m.n = n;
  const std::uint64_t signs_x = rng.bits(n), signs_z = rng.bits(n);
  for (int i = 0; i < n; ++i) {
    m.x_images.push_back(PauliString::hermitian(n, vs[i].x, vs[i].z, (signs_x >> i) & 1));
    m.z_images.push_back(PauliString::hermitian(n, ws[i].x, ws[i].z, (signs_z >> i) & 1));
  }
  return m;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const CliffordMap& map) : map_(map), reduction_(map.n) {}

  void apply(const Gate& g) {
    reduction_.append(g);
    for (auto& p : map_.x_images) p = conjugate(p, g);
    for (auto& p : map_.z_images) p = conjugate(p, g);
  }
  void h(int q) { apply(Gate{GateKind::H, q}); }
  void s(int q) { apply(Gate{GateKind::S, q}); }
  void cnot(int c, int t) { apply(Gate{GateKind::CNOT, c, t}); }

  void reduce_qubit(int k) {
    const int n = map_.n;
    const std::uint64_t kb = std::uint64_t{1} << k;
    // Image of X_k -> X_k.
    {
      const PauliString& p = map_.x_images[k];
      const std::uint64_t x = p.x(), z = p.z();
      for (int j = k; j < n; ++j) {
        const std::uint64_t jb = std::uint64_t{1} << j;
        if ((z & jb) && !(x & jb)) h(j);
        else if ((z & jb) && (x & jb)) s(j);
      }
    }
    if (!(map_.x_images[k].x() & kb)) {
      const std::uint64_t x = map_.x_images[k].x();
      if (x == 0) throw std::logic_error("synthesize: image of X is identity");
      cnot(std::countr_zero(x), k);
    }
    for (int j = k + 1; j < n; ++j)
      if (map_.x_images[k].x() & (std::uint64_t{1} << j)) cnot(k, j);
    // Image of Z_k -> Z_k, keeping X_k fixed.
    if (map_.z_images[k].x() & kb) {
      h(k);
      s(k);
      h(k);
    }
    {
      const PauliString& p = map_.z_images[k];
      const std::uint64_t x = p.x(), z = p.z();
      for (int j = k + 1; j < n; ++j) {
        const std::uint64_t jb = std::uint64_t{1} << j;
        if ((x & jb) && !(z & jb)) {
          h(j);
        } else if ((x & jb) && (z & jb)) {
          s(j);
          h(j);
        }
      }
    }
    for (int j = k + 1; j < n; ++j)
      if (map_.z_images[k].z() & (std::uint64_t{1} << j)) cnot(j, k);
    if (map_.x_images[k].sign() < 0) {
      s(k);
      s(k);
    }
    if (map_.z_images[k].sign() < 0) {
      h(k);
      s(k);
      s(k);
      h(k);
    }
  }

  CliffordCircuit finish() const {
    if (!(map_ == CliffordMap::identity(map_.n)))
      throw std::logic_error("synthesize: reduction did not reach the identity");
    return reduction_.inverse();
  }

 private:
  CliffordMap map_;
  CliffordCircuit reduction_;
};

}  // namespace

CliffordCircuit synthesize(const CliffordMap& map) {
  map.validate();
  Reducer reducer(map);
  for (int k = 0; k < map.n; ++k) reducer.reduce_qubit(k);
  return reducer.finish();
}

CliffordCircuit sample_random_clifford(int n, Rng& rng) { return synthesize(sample_clifford_map(n, rng)); }

}  // namespace stabscope
