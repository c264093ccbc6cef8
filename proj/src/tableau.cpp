#include "stabscope/tableau.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "stabscope/error.hpp"

namespace stabscope {

namespace {

// Rank over F2 of the (x|z) rows.
int symplectic_rank(const std::vector<PauliString>& rows) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> m;
  for (const auto& p : rows) m.emplace_back(p.x(), p.z());
  int rank = 0;
  for (int col = 0; col < 128 && rank < static_cast<int>(m.size()); ++col) {
    auto bit = [col](const std::pair<std::uint64_t, std::uint64_t>& r) {
      return col < 64 ? (r.first >> col) & 1 : (r.second >> (col - 64)) & 1;
    };
    std::size_t pivot = rank;
    while (pivot < m.size() && !bit(m[pivot])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && bit(m[r])) {
        m[r].first ^= m[rank].first;
        m[r].second ^= m[rank].second;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Tableau::Tableau(int n, std::vector<PauliString> generators) : n_(n), generators_(std::move(generators)) {
  require(n >= 1 && n <= PauliString::kMaxQubits, "Tableau: qubit count out of range");
  require(static_cast<int>(generators_.size()) == n, "Tableau: need exactly n generators");
  for (const auto& g : generators_) {
    require(g.n() == n, "Tableau: generator qubit count mismatch");
    require(g.is_hermitian(), "Tableau: generator is not Hermitian");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      require(commutes(generators_[i], generators_[j]), "Tableau: generators do not commute");
  require(symplectic_rank(generators_) == n, "Tableau: generators are not independent");
}

Tableau Tableau::zero_state(int n) {
  std::vector<PauliString> gens;
  for (int q = 0; q < n; ++q) gens.push_back(PauliString::hermitian(n, 0, std::uint64_t{1} << q));
  return Tableau(n, std::move(gens));
}

void Tableau::apply(const Gate& gate) {
  for (auto& g : generators_) g = conjugate(g, gate);
}

void Tableau::apply(const CliffordCircuit& circuit) {
  require(circuit.n() == n_, "Tableau: circuit qubit count mismatch");
  for (const Gate& gate : circuit.gates()) apply(gate);
}

Tableau tableau_new(int n) { return Tableau::zero_state(n); }

Tableau apply_clifford(Tableau tableau, const CliffordCircuit& circuit) {
  tableau.apply(circuit);
  return tableau;
}

StateVector tableau_to_statevector(const Tableau& tableau) {
  const int n = tableau.n();
  guard(n <= StateVector::kMaxQubits, "tableau_to_statevector: n exceeds dense limit");
  // Row-reduce on the x part; rows left with x = 0 are the Z-type subgroup.
  std::vector<PauliString> rows = tableau.generators();
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    const std::uint64_t b = std::uint64_t{1} << col;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot].x() & b)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r].x() & b)) rows[r] = pauli_mul(rows[rank], rows[r]);
    ++rank;
  }
  // Support point x0 solves z_r . x0 = sign bit for each Z-type row.
  std::vector<std::pair<std::uint64_t, int>> eqs;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r].is_hermitian()) throw std::logic_error("tableau_to_statevector: non-Hermitian product");
    eqs.emplace_back(rows[r].z(), rows[r].sign() < 0 ? 1 : 0);
  }
  std::uint64_t x0 = 0;
  {
    std::size_t er = 0;
    std::vector<int> pivots;
    for (int col = 0; col < n && er < eqs.size(); ++col) {
      const std::uint64_t b = std::uint64_t{1} << col;
      std::size_t p = er;
      while (p < eqs.size() && !(eqs[p].first & b)) ++p;
      if (p == eqs.size()) continue;
      std::swap(eqs[er], eqs[p]);
      for (std::size_t r = 0; r < eqs.size(); ++r) {
        if (r != er && (eqs[r].first & b)) {
          eqs[r].first ^= eqs[er].first;
          eqs[r].second ^= eqs[er].second;
        }
      }
      pivots.push_back(col);
      ++er;
    }
    if (er != eqs.size()) throw std::logic_error("tableau_to_statevector: inconsistent Z constraints");
    for (std::size_t r = 0; r < er; ++r)
      if (eqs[r].second) x0 |= std::uint64_t{1} << pivots[r];
  }
  std::vector<Complex> amps(std::size_t{1} << n);
  amps[x0] = 1.0;
  StateVector psi(n, std::move(amps));
  // Projectors (I + g)/2 for the X-carrying generators; the Z-type ones already fix |x0>.
  for (std::size_t r = 0; r < rank; ++r) {
    StateVector image = psi;
    image.apply_pauli(rows[r]);
    std::vector<Complex> sum(psi.dim());
    double norm = 0.0;
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] = psi[i] + image[i];
      norm += std::norm(sum[i]);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& v : sum) v *= scale;
    psi = StateVector(n, std::move(sum));
  }
  std::vector<Complex> out(psi.amplitudes().begin(), psi.amplitudes().end());
  for (const auto& a : out) {
    if (std::abs(a) > 1e-12) {
      const Complex phase = std::conj(a) / std::abs(a);
      for (auto& v : out) v *= phase;
      break;
    }
  }
  return StateVector(n, std::move(out));
}

std::vector<PauliString> stabilizer_group(const Tableau& tableau) {
  const int n = tableau.n();
  guard(n <= 20, "stabilizer_group: n exceeds enumeration limit");
  const auto& gens = tableau.generators();
  std::vector<PauliString> group;
  group.reserve(std::size_t{1} << n);
  PauliString current = PauliString::identity(n);
  group.push_back(current);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    // Gray code flips the generator at the lowest set bit of i.
    current = pauli_mul(current, gens[std::countr_zero(i)]);
    if (!current.is_hermitian())
      throw std::logic_error("stabilizer_group: product of commuting generators is not Hermitian");
    group.push_back(current);
  }
  return group;
}

}  // namespace stabscope
