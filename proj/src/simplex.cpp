#include "stabscope/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stabscope/error.hpp"
#include "stabscope/random.hpp"

namespace stabscope {

namespace {

constexpr double kSnap = 1e-13;

class Tableau {
 public:
  // The artificial columns start as the identity and therefore always hold the inverse
  // basis, which lets restore_rhs() swap the perturbed right-hand side for the true one.
  Tableau(const LinearProgram& lp, double tol, const std::vector<double>& perturbation)
      : m_(lp.rows), n_(lp.cols), width_(lp.cols + lp.rows + 1), tol_(tol),
        t_((lp.rows + 1) * width_, 0.0), basis_(lp.rows), b_(lp.rows) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * lp.a[i * n_ + j];
      at(i, n_ + i) = 1.0;
      b_[i] = sign * lp.b[i];
      rhs(i) = b_[i] + perturbation[i];
      basis_[i] = n_ + i;
    }
  }

  void restore_rhs() {
    for (std::size_t i = 0; i < m_; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k < m_; ++k) v += at(i, n_ + k) * b_[k];
      rhs(i) = std::abs(v) < kSnap ? 0.0 : v;
    }
  }

  // Dual simplex over columns [0, allowed): keeps reduced costs non-negative while
  // driving negative basic values out of the basis.
  void dual_repair(std::size_t allowed, std::size_t& iterations) {
    constexpr std::size_t kMaxIterations = 1000000;
    while (true) {
      std::size_t leave = m_;
      double worst = -tol_;
      for (std::size_t i = 0; i < m_; ++i)
        if (!dropped_row(i) && rhs(i) < worst) {
          worst = rhs(i);
          leave = i;
        }
      if (leave == m_) return;
      std::size_t enter = allowed;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < allowed; ++j) {
        const double a = at(leave, j);
        if (a >= -tol_) continue;
        const double ratio = std::max(cost(j), 0.0) / -a;
        if (ratio < best) {
          best = ratio;
          enter = j;
        }
      }
      if (enter == allowed) throw NumericalError("solve_simplex: infeasible constraints");
      pivot(leave, enter);
      if (++iterations > kMaxIterations) throw NumericalError("solve_simplex: iteration limit reached");
    }
  }

  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double& rhs(std::size_t i) { return t_[i * width_ + width_ - 1]; }
  double& cost(std::size_t j) { return t_[m_ * width_ + j]; }

  // Reduced costs for the given column costs (artificials beyond `costs`).
  void set_objective(const std::vector<double>& costs) {
    for (std::size_t j = 0; j < width_; ++j) cost(j) = j < costs.size() ? costs[j] : 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = basis_[i] < costs.size() ? costs[basis_[i]] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_[i * width_ + col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        double& v = t_[i * width_ + j];
        v -= f * at(row, j);
        // Rounding residue must not leave a slightly negative rhs, which breaks the ratio test.
        if (std::abs(v) < kSnap) v = 0.0;
      }
    }
    basis_[row] = col;
  }

  // Dantzig pricing over columns [0, allowed); after a run of degenerate pivots it falls
  // back to Bland's rule, which cannot cycle, until the objective moves again.
  void optimize(std::size_t allowed, std::size_t& iterations) {
    constexpr std::size_t kMaxIterations = 1000000;
    constexpr int kDegenerateRun = 50;
    int degenerate = 0;
    while (true) {
      const bool bland = degenerate >= kDegenerateRun;
      std::size_t enter = allowed;
      double most_negative = -tol_;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost(j) >= most_negative) continue;
        enter = j;
        if (bland) break;
        most_negative = cost(j);
      }
      if (enter == allowed) return;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      double pivot_size = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (dropped_row(i)) continue;
        const double a = at(i, enter);
        if (a <= tol_) continue;
        const double ratio = std::max(rhs(i), 0.0) / a;
        bool take = ratio < best - tol_;
        if (!take && std::abs(ratio - best) <= tol_)
          take = bland ? basis_[i] < basis_[leave] : a > pivot_size;
        if (take) {
          best = ratio;
          leave = i;
          pivot_size = a;
        }
      }
      if (leave == m_) throw NumericalError("solve_simplex: unbounded objective");
      degenerate = best <= tol_ ? degenerate + 1 : 0;
      pivot(leave, enter);
      if (++iterations > kMaxIterations) throw NumericalError("solve_simplex: iteration limit reached");
    }
  }

  // After phase one: move artificials out of the basis, dropping redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (std::abs(at(i, j)) > tol_) {
          col = j;
          break;
        }
      if (col == n_) {
        dropped_.push_back(i);
        continue;
      }
      pivot(i, col);
    }
  }

  bool dropped_row(std::size_t i) const {
    for (auto d : dropped_)
      if (d == i) return true;
    return false;
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  std::size_t m_, n_, width_;
  double tol_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> dropped_;
  std::vector<double> b_;  // sign-adjusted true right-hand side
};

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp, double tolerance) {
  require(lp.a.size() == lp.rows * lp.cols && lp.b.size() == lp.rows && lp.c.size() == lp.cols,
          "solve_simplex: inconsistent dimensions");
  double scale = 1.0;
  for (double v : lp.b) scale = std::max(scale, std::abs(v));
  // A fixed random perturbation of b breaks the degeneracy that otherwise stalls the
  // pivoting on sparse right-hand sides; each phase ends on the true b.
  Rng rng(0x5eed);
  std::vector<double> perturbation(lp.rows);
  for (auto& p : perturbation) p = 1e3 * tolerance * scale * (1.0 + rng.uniform());
  Tableau t(lp, tolerance, perturbation);
  LpSolution sol;
  // Phase one: minimize the sum of artificials.
  std::vector<double> phase1(lp.cols + lp.rows, 0.0);
  for (std::size_t i = 0; i < lp.rows; ++i) phase1[lp.cols + i] = 1.0;
  t.set_objective(phase1);
  t.optimize(lp.cols + lp.rows, sol.iterations);
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < t.m(); ++i)
    if (t.basis()[i] >= t.n()) infeasibility += t.rhs(i);
  // Redundant rows leave artificials at the perturbation level; the final dual repair
  // reports genuine infeasibility below this threshold.
  double perturbation_total = 0.0;
  for (double p : perturbation) perturbation_total += p;
  if (infeasibility > tolerance * scale * static_cast<double>(lp.rows) + 10.0 * perturbation_total)
    throw NumericalError("solve_simplex: infeasible constraints");
  t.expel_artificials();
  // Phase two over the original columns only.
  t.set_objective(lp.c);
  t.optimize(lp.cols, sol.iterations);
  t.restore_rhs();
  t.dual_repair(lp.cols, sol.iterations);
  sol.x.assign(lp.cols, 0.0);
  for (std::size_t i = 0; i < t.m(); ++i)
    if (t.basis()[i] < t.n() && !t.dropped_row(i)) sol.x[t.basis()[i]] = t.rhs(i);
  sol.objective = 0.0;
  for (std::size_t j = 0; j < lp.cols; ++j) sol.objective += lp.c[j] * sol.x[j];
  return sol;
}

}  // namespace stabscope
