#include <gtest/gtest.h>

#include <cmath>

#include "stabscope/analysis.hpp"
#include "stabscope/error.hpp"

using namespace stabscope;

namespace {

Curve sample(const std::function<double(double)>& f, double lo, double hi, int points) {
  Curve c;
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    c.x.push_back(x);
    c.y.push_back(f(x));
  }
  return c;
}

// Sigmoid family whose derivative peaks sharpen with n and all cross at x0.
std::map<int, Curve> sigmoid_family(double x0, std::initializer_list<int> ns) {
  std::map<int, Curve> out;
  for (int n : ns) out[n] = sample([=](double x) { return 1.0 / (1.0 + std::exp(-n * (x - x0))); }, 0.0, 4.0, 401);
  return out;
}

}  // namespace

TEST(Curve, LinearInterpolationAndExtrapolation) {
  const Curve c{{0.0, 1.0, 2.0}, {0.0, 2.0, 6.0}};
  EXPECT_DOUBLE_EQ(c.interpolate(0.5), 1.0);
  EXPECT_DOUBLE_EQ(c.interpolate(1.5), 4.0);
  EXPECT_DOUBLE_EQ(c.interpolate(3.0), 10.0);
}

TEST(Derivative, ExactForQuadraticInterior) {
  const Curve d = estimate_derivative(sample([](double x) { return x * x; }, 0.0, 2.0, 21));
  for (std::size_t i = 1; i + 1 < d.size(); ++i) EXPECT_NEAR(d.y[i], 2.0 * d.x[i], 1e-12);
}

TEST(Derivative, RejectsNonUniformGrid) {
  EXPECT_THROW(estimate_derivative(Curve{{0.0, 1.0, 3.0}, {0, 0, 0}}), std::invalid_argument);
}

TEST(Crossing, FindsCommonPoint) {
  const CrossingReport r = find_crossing(sigmoid_family(2.0, {4, 8, 16}), AxisMap::none(), 2.0);
  ASSERT_EQ(r.pairs.size(), 2u);
  for (const auto& p : r.pairs) EXPECT_NEAR(p.x, 2.0, 1e-9);
  EXPECT_NEAR(r.pooled, 2.0, 1e-9);
  EXPECT_NEAR(r.spread, 0.0, 1e-9);
}

TEST(Crossing, IgnoresNoiseCrossingsOnPlateau) {
  // Difference a - b: small jitter around 0 on [0, 2], a large negative lobe on
  // [2, 5], then a positive lobe on [5, 8]. Only the switch at 5 separates
  // regions of opposite net sign.
  Curve a, b;
  const std::vector<double> diff{0.01, -0.01, 0.01, -0.01, 0.0, -0.5, -1, -0.5, 0, 0.5, 1, 0.5, 0.1};
  for (std::size_t i = 0; i < diff.size(); ++i) {
    const double x = 0.5 * static_cast<double>(i) + (i >= 4 ? 0.5 * static_cast<double>(i - 4) : 0.0);
    a.x.push_back(x);
    b.x.push_back(x);
    a.y.push_back(diff[i]);
    b.y.push_back(0.0);
  }
  const CrossingReport r = find_crossing({{2, a}, {3, b}}, AxisMap::none(), 2.0);
  EXPECT_GE(r.pairs[0].candidates.size(), 3u);
  EXPECT_NEAR(r.pairs[0].x, a.x[8], 1e-12);
}

TEST(Crossing, AlignmentMapsVariable) {
  std::map<int, Curve> curves;
  for (int n : {4, 8}) curves[n] = sample([=](double x) { return std::tanh(x - 0.5 * n); }, 0.0, 8.0, 81);
  for (auto& y : curves[8].y) y *= 2.0;
  const CrossingReport r = find_crossing(curves, AxisMap::scale(), 2.0);
  EXPECT_EQ(r.alignment, "scale");
  EXPECT_NEAR(r.pairs[0].x, 0.5, 1e-9);
}

TEST(Crossing, DegenerateAndMissing) {
  const Curve a{{0, 1}, {0, 1}};
  const CrossingReport r = find_crossing({{2, a}, {3, a}}, AxisMap::none(), 2.0);
  EXPECT_TRUE(r.pairs[0].degenerate);
  EXPECT_TRUE(std::isnan(r.pooled));
  const Curve b{{0, 1}, {1, 2}};
  EXPECT_THROW(find_crossing({{2, a}, {3, b}}, AxisMap::none(), 2.0), NumericalError);
}

TEST(Crossing, WindowRestrictsSearch) {
  const Curve a{{0, 1, 2, 3, 4}, {0, 0, 0, 0, 0}};
  const Curve b{{0, 1, 2, 3, 4}, {1, -1, 1, 1, -1}};
  const CrossingReport r = find_crossing({{2, a}, {3, b}}, AxisMap::none(), 2.0, 1.0, std::pair{2.5, 4.0});
  ASSERT_EQ(r.pairs[0].candidates.size(), 1u);
  EXPECT_NEAR(r.pairs[0].x, 3.5, 1e-12);
  EXPECT_EQ(r.reference, 1.0);
}

TEST(Collapse, PerfectScalingFamilyHasZeroResidual) {
  std::map<int, Curve> curves;
  for (int n : {4, 8, 16})
    curves[n] = sample([=](double x) { return std::tanh((x - 1.0) * n) / n; }, 0.0, 2.0, 2001);
  CollapseRule rule;
  rule.center = [](int) { return 1.0; };
  rule.abscissa_exponent = 1.0;
  rule.ordinate_exponent = 1.0;
  const CollapseReport r = collapse_curves(curves, rule, 2.0, 0.2);
  EXPECT_LT(r.residual, 2e-3);
  rule.ordinate_exponent = 0.0;
  EXPECT_GT(collapse_curves(curves, rule, 2.0, 0.2).residual, 0.1);
}

TEST(Collapse, DefaultWindowIsFifthOfNarrowestSpan) {
  std::map<int, Curve> curves{{2, Curve{{0, 1, 2}, {0, 1, 2}}}, {3, Curve{{0, 5}, {0, 5}}}};
  const CollapseReport r = collapse_curves(curves, CollapseRule{}, 2.0);
  EXPECT_DOUBLE_EQ(r.window, 0.4);
  EXPECT_NEAR(r.residual, 0.0, 1e-12);
}
