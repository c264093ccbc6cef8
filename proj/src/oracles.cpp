#include "stabscope/oracles.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

#include "stabscope/error.hpp"
#include "stabscope/parallel.hpp"
#include "stabscope/simplex.hpp"
#include "stabscope/spectrum.hpp"
#include "stabscope/sre.hpp"

namespace stabscope {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kShortCircuit = 1.0 - 1e-12;

struct Candidate {
  double value = -1.0;
  std::optional<StabilizerStateDescriptor> descriptor;
  std::uint64_t visited = 0;

  void offer(double v, const AffineCoset& coset, std::uint64_t l, std::uint64_t q) {
    if (v > value + kTieTolerance) {
      value = v;
      descriptor = make_descriptor(coset, l, q);
    } else if (v >= value - kTieTolerance) {
      auto d = make_descriptor(coset, l, q);
      if (d < *descriptor) {
        descriptor = std::move(d);
        value = std::max(value, v);
      }
    }
  }

  void merge(const Candidate& other) {
    visited += other.visited;
    if (!other.descriptor) return;
    if (!descriptor || other.value > value + kTieTolerance) {
      value = other.value;
      descriptor = other.descriptor;
    } else if (other.value >= value - kTieTolerance && *other.descriptor < *descriptor) {
      value = std::max(value, other.value);
      descriptor = other.descriptor;
    }
  }
};

}  // namespace

OracleResult stabilizer_fidelity(const StateVector& psi, int threads) {
  const int n = psi.n();
  guard(n >= 1 && n <= kStabilizerEnumerationMaxQubits, "stabilizer_fidelity: n exceeds enumeration limit");
  const std::vector<AffineCoset> cosets = affine_cosets(n);
  const int workers = std::max(1, threads);
  std::vector<Candidate> partial(workers);
  std::atomic<bool> done{false};
  parallel_for(cosets.size(), workers, [&](std::size_t begin, std::size_t end, int w) {
    Candidate& best = partial[w];
    for (std::size_t c = begin; c < end && !done.load(std::memory_order_relaxed); ++c) {
      for_each_coset_overlap(cosets[c], psi, [&](std::uint64_t l, std::uint64_t q, Complex overlap) {
        ++best.visited;
        best.offer(std::norm(overlap), cosets[c], l, q);
      });
      if (best.value >= kShortCircuit) done.store(true, std::memory_order_relaxed);
    }
  });
  Candidate best;
  for (const auto& p : partial) best.merge(p);
  OracleResult r;
  r.measure = "stabilizer_fidelity";
  r.n = n;
  r.value = std::min(best.value, 1.0);
  r.closest = best.descriptor;
  r.states_visited = best.visited;
  r.certified = std::abs(std::norm(descriptor_overlap(*best.descriptor, psi)) - best.value) <= 1e-12;
  return r;
}

OracleResult min_relative_entropy(const StateVector& psi, int threads) {
  OracleResult r = stabilizer_fidelity(psi, threads);
  r.measure = "min_relative_entropy";
  r.value = std::max(0.0, -std::log(r.value));
  return r;
}

OracleResult log_free_robustness(const StateVector& psi) {
  const int n = psi.n();
  guard(n >= 1 && n <= kRobustnessMaxQubits, "log_free_robustness: n exceeds LP limit");
  std::vector<StabilizerStateDescriptor> states;
  enumerate_stabilizer_states(n, [&](const StabilizerStateDescriptor& d) { states.push_back(d); });
  const std::size_t m = states.size();
  const std::size_t rows = std::size_t{1} << (2 * n);
  std::vector<std::vector<double>> columns;
  columns.reserve(m);
  for (const auto& d : states) columns.push_back(pauli_expectations(d.to_statevector()).values);
  const std::vector<double> target = pauli_expectations(psi).values;

  // x = u - v with u, v >= 0.
  LinearProgram lp;
  lp.rows = rows;
  lp.cols = 2 * m;
  lp.a.assign(rows * 2 * m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < rows; ++s) {
      lp.a[s * 2 * m + i] = columns[i][s];
      lp.a[s * 2 * m + m + i] = -columns[i][s];
    }
  lp.b = target;
  lp.c.assign(2 * m, 1.0);
  const LpSolution sol = solve_simplex(lp);

  OracleResult r;
  r.measure = "log_free_robustness";
  r.n = n;
  r.states_visited = m;
  std::vector<double> recon(rows, 0.0);
  double l1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = sol.x[i] - sol.x[m + i];
    if (std::abs(x) <= 1e-12) continue;
    r.decomposition.emplace_back(states[i], x);
    l1 += std::abs(x);
    for (std::size_t s = 0; s < rows; ++s) recon[s] += x * columns[i][s];
  }
  if (sol.objective < 1.0 - 1e-9) throw NumericalError("log_free_robustness: optimum below 1");
  r.value = std::log(std::max(sol.objective, 1.0));
  double residual = 0.0;
  for (std::size_t s = 0; s < rows; ++s) residual = std::max(residual, std::abs(recon[s] - target[s]));
  r.certified = residual <= 1e-9 && std::abs(l1 - sol.objective) <= 1e-9;
  return r;
}

OracleResult stabilizer_nullity(const StateVector& psi, int threads) {
  const PauliSpectrum s = pauli_spectrum(psi, threads);
  std::size_t count = 0;
  for (double v : s.values) count += std::abs(v - 1.0) <= 1e-9;
  OracleResult r;
  r.measure = "stabilizer_nullity";
  r.n = psi.n();
  r.value = psi.n() * std::numbers::ln2 - std::log(static_cast<double>(count));
  r.certified = (count & (count - 1)) == 0;  // the stabilizer subgroup has power-of-two order
  return r;
}

std::vector<BoundCheck> check_bounds(const StateVector& psi, const std::vector<double>& alphas, int threads) {
  const int n = psi.n();
  const PauliSpectrum spectrum = pauli_spectrum(psi, threads);
  std::vector<BoundCheck> rows;
  auto add = [&](std::string name, double alpha, double lhs, double rhs) {
    rows.push_back(BoundCheck{std::move(name), alpha, lhs, rhs, lhs >= rhs - kBoundTolerance, lhs - rhs});
  };
  if (n <= kStabilizerEnumerationMaxQubits) {
    const double dmin = min_relative_entropy(psi, threads).value;
    for (double alpha : alphas) {
      if (alpha <= 1.0) continue;
      add("min_relative_entropy", alpha, dmin, (alpha - 1.0) / (2.0 * alpha) * sre(spectrum, alpha).value);
    }
  }
  if (n <= kRobustnessMaxQubits)
    add("log_free_robustness", 0.5, log_free_robustness(psi).value, sre(spectrum, 0.5).value / 2.0);
  add("stabilizer_nullity", 0.0, stabilizer_nullity(psi, threads).value, sre(spectrum, 0.0).value);
  return rows;
}

}  // namespace stabscope
