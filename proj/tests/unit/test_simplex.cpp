#include <gtest/gtest.h>

#include "stabscope/error.hpp"
#include "stabscope/simplex.hpp"

using namespace stabscope;

TEST(Simplex, SmallProblemWithSlacks) {
  // minimize -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
  LinearProgram lp{2, 4, {1, 2, 1, 0, 3, 1, 0, 1}, {4, 6}, {-1, -1, 0, 0}};
  const LpSolution s = solve_simplex(lp);
  EXPECT_NEAR(s.objective, -2.8, 1e-12);
  EXPECT_NEAR(s.x[0], 1.6, 1e-12);
  EXPECT_NEAR(s.x[1], 1.2, 1e-12);
}

TEST(Simplex, NegativeRightHandSide) {
  // minimize x s.t. -x + s = -3 forces x >= 3.
  LinearProgram lp{1, 2, {-1, 1}, {-3}, {1, 0}};
  EXPECT_NEAR(solve_simplex(lp).objective, 3.0, 1e-12);
}

TEST(Simplex, RedundantRows) {
  LinearProgram lp{2, 2, {1, 1, 2, 2}, {1, 2}, {1, 2}};
  const LpSolution s = solve_simplex(lp);
  EXPECT_NEAR(s.objective, 1.0, 1e-12);
  EXPECT_NEAR(s.x[0], 1.0, 1e-12);
}

TEST(Simplex, DetectsInfeasible) {
  LinearProgram lp{2, 1, {1, 1}, {1, 2}, {1}};
  EXPECT_THROW(solve_simplex(lp), NumericalError);
}

TEST(Simplex, DetectsUnbounded) {
  LinearProgram lp{1, 2, {1, -1}, {1}, {0, -1}};
  EXPECT_THROW(solve_simplex(lp), NumericalError);
}

TEST(Simplex, DegenerateCycleProneProblem) {
  // Beale's example, which cycles under Dantzig's rule without anti-cycling.
  LinearProgram lp{3, 7,
                   {0.25, -8, -1, 9, 1, 0, 0, 0.5, -12, -0.5, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                   {0, 0, 1},
                   {-0.75, 20, -0.5, 6, 0, 0, 0}};
  EXPECT_NEAR(solve_simplex(lp).objective, -1.25, 1e-12);
}
