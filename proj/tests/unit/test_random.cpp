#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "stabscope/random.hpp"

using namespace stabscope;

TEST(Random, SameSeedSameStream) {
  Rng a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    differs |= va != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Random, KnownSplitmixValue) {
  // First output of splitmix64 seeded with 0.
  std::uint64_t state = 0;
  EXPECT_EQ(splitmix64(state), 0xe220a8397b1dcdafULL);
}

TEST(Random, DeriveSeedDependsOnPath) {
  EXPECT_NE(derive_seed(1, {0, 6, 0}), derive_seed(1, {0, 6, 1}));
  EXPECT_NE(derive_seed(1, {0, 6, 0}), derive_seed(2, {0, 6, 0}));
  EXPECT_NE(derive_seed(1, {0, 6}), derive_seed(1, {6, 0}));
  EXPECT_EQ(derive_seed(9, {1, 2, 3}), derive_seed(9, {1, 2, 3}));
}

TEST(Random, BelowIsInRangeAndRoughlyUniform) {
  Rng rng(5);
  std::vector<int> counts(7, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - draws / 7.0) * (c - draws / 7.0) / (draws / 7.0);
  EXPECT_LT(chi2, 22.5);  // 6 dof, p ~ 1e-3
}

TEST(Random, UniformInUnitInterval) {
  Rng rng(3);
  double s = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
  }
  EXPECT_NEAR(s / 100000, 0.5, 0.005);
}

TEST(Random, NormalMoments) {
  Rng rng(17);
  const int m = 200000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < m; ++i) {
    const double g = rng.normal();
    s += g;
    s2 += g * g;
  }
  EXPECT_NEAR(s / m, 0.0, 0.01);
  EXPECT_NEAR(s2 / m, 1.0, 0.01);
}
