#pragma once

#include <cstddef>
#include <vector>

namespace stabscope {

// minimize c.x subject to A x = b, x >= 0; A is row-major rows x cols.
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

struct LpSolution {
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

// Dense two-phase simplex. Pricing is Dantzig's rule with a Bland fallback on runs of
// degenerate pivots; b carries a fixed tiny perturbation during both phases and the
// final basis is re-solved against the true b. Pivots and reduced costs below
// tolerance count as zero. Throws NumericalError if infeasible or unbounded.
LpSolution solve_simplex(const LinearProgram& lp, double tolerance = 1e-9);

}  // namespace stabscope
