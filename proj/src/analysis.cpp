#include "stabscope/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stabscope/error.hpp"

namespace stabscope {

double Curve::interpolate(double at) const {
  require(!x.empty() && x.size() == y.size(), "Curve: empty or inconsistent");
  if (x.size() == 1) return y[0];
  auto it = std::upper_bound(x.begin(), x.end(), at);
  std::size_t hi = static_cast<std::size_t>(it - x.begin());
  if (hi == 0) hi = 1;
  if (hi >= x.size()) hi = x.size() - 1;
  const std::size_t lo = hi - 1;
  const double w = (at - x[lo]) / (x[hi] - x[lo]);
  return y[lo] + w * (y[hi] - y[lo]);
}

Curve estimate_derivative(const Curve& c) {
  require(c.x.size() == c.y.size(), "estimate_derivative: x and y lengths differ");
  require(c.x.size() >= 2, "estimate_derivative: need at least two points");
  const std::size_t m = c.x.size();
  const double h = (c.x.back() - c.x.front()) / static_cast<double>(m - 1);
  require(h > 0.0, "estimate_derivative: grid must be increasing");
  for (std::size_t i = 1; i < m; ++i)
    require(std::abs((c.x[i] - c.x[i - 1]) - h) <= 1e-9 * std::max(std::abs(h), std::abs(c.x[i])),
            "estimate_derivative: non-uniform grid");
  Curve d{c.x, std::vector<double>(m)};
  d.y[0] = (c.y[1] - c.y[0]) / h;
  d.y[m - 1] = (c.y[m - 1] - c.y[m - 2]) / h;
  for (std::size_t i = 1; i + 1 < m; ++i) d.y[i] = (c.y[i + 1] - c.y[i - 1]) / (2.0 * h);
  return d;
}

AxisMap AxisMap::none() { return AxisMap{}; }

AxisMap AxisMap::shift(std::function<double(int)> center) {
  AxisMap m;
  m.name = "shift";
  m.offset = std::move(center);
  return m;
}

AxisMap AxisMap::scale() {
  AxisMap m;
  m.name = "scale";
  m.divisor = [](int n) { return static_cast<double>(n); };
  return m;
}

namespace {

Curve transform(const Curve& c, int n, const AxisMap& map) {
  Curve out{std::vector<double>(c.size()), c.y};
  for (std::size_t i = 0; i < c.size(); ++i) out.x[i] = map(n, c.x[i]);
  return out;
}

// Sorted union of both grids inside [lo, hi], endpoints included.
std::vector<double> merged_grid(const Curve& a, const Curve& b, double lo, double hi) {
  std::vector<double> g{lo, hi};
  for (double v : a.x)
    if (v > lo && v < hi) g.push_back(v);
  for (double v : b.x)
    if (v > lo && v < hi) g.push_back(v);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end(), [](double p, double q) { return std::abs(p - q) <= 1e-12; }), g.end());
  return g;
}

}  // namespace

CrossingReport find_crossing(const std::map<int, Curve>& curves, const AxisMap& alignment, double alpha,
                             std::optional<double> reference, std::optional<std::pair<double, double>> window) {
  require(curves.size() >= 2, "find_crossing: need at least two curves");
  CrossingReport report;
  report.alpha = alpha;
  report.alignment = alignment.name;
  report.reference = reference;
  report.window = window;
  std::vector<std::pair<int, Curve>> aligned;
  for (const auto& [n, c] : curves) {
    require(c.size() >= 2 && c.x.size() == c.y.size(), "find_crossing: malformed curve");
    aligned.emplace_back(n, transform(c, n, alignment));
  }
  std::vector<double> estimates;
  for (std::size_t p = 0; p + 1 < aligned.size(); ++p) {
    const auto& [na, a] = aligned[p];
    const auto& [nb, b] = aligned[p + 1];
    PairCrossing pc;
    pc.n_a = na;
    pc.n_b = nb;
    double lo = std::max(a.x.front(), b.x.front());
    double hi = std::min(a.x.back(), b.x.back());
    if (window) {
      lo = std::max(lo, window->first);
      hi = std::min(hi, window->second);
    }
    if (!(hi > lo)) throw NumericalError("find_crossing: curves have no common domain");
    const std::vector<double> grid = merged_grid(a, b, lo, hi);
    std::vector<double> diff(grid.size());
    bool identical = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      diff[i] = a.interpolate(grid[i]) - b.interpolate(grid[i]);
      identical &= std::abs(diff[i]) <= 1e-12;
    }
    if (identical) {
      pc.degenerate = true;
      pc.x = std::numeric_limits<double>::quiet_NaN();
      report.pairs.push_back(pc);
      continue;
    }
    // area[i]: trapezoid integral of the difference from lo to grid[i].
    std::vector<double> area(grid.size(), 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i)
      area[i] = area[i - 1] + 0.5 * (diff[i - 1] + diff[i]) * (grid[i] - grid[i - 1]);
    const double total = area.back();
    double best_score = -1.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double d0 = diff[i], d1 = diff[i + 1];
      const bool change = d0 != 0.0 && (d1 == 0.0 || (d0 < 0.0) != (d1 < 0.0));
      if (!change) continue;
      const double x = grid[i] + (grid[i + 1] - grid[i]) * d0 / (d0 - d1);
      pc.candidates.push_back(x);
      // Net signed area on each side; a genuine crossing separates opposite-signed
      // regions, while noise crossings leave one side with almost no net area.
      const double before = area[i] + 0.5 * d0 * (x - grid[i]);
      const double after = total - before;
      const double score = (before < 0.0) != (after < 0.0) ? std::min(std::abs(before), std::abs(after)) : 0.0;
      if (score > best_score) {
        best_score = score;
        pc.x = x;
      }
    }
    if (pc.candidates.empty())
      throw NumericalError("find_crossing: no crossing between n=" + std::to_string(na) +
                           " and n=" + std::to_string(nb) + " in the window");
    estimates.push_back(pc.x);
    report.pairs.push_back(pc);
  }
  if (estimates.empty()) {
    report.pooled = report.spread = std::numeric_limits<double>::quiet_NaN();
  } else {
    double s = 0.0;
    for (double e : estimates) s += e;
    report.pooled = s / static_cast<double>(estimates.size());
    const auto [mn, mx] = std::minmax_element(estimates.begin(), estimates.end());
    report.spread = *mx - *mn;
  }
  return report;
}

CollapseReport collapse_curves(const std::map<int, Curve>& curves, const CollapseRule& rule, double alpha,
                               std::optional<double> window) {
  require(curves.size() >= 2, "collapse_curves: need at least two curves");
  CollapseReport report;
  report.alpha = alpha;
  report.abscissa_exponent = rule.abscissa_exponent;
  report.ordinate_exponent = rule.ordinate_exponent;
  if (window) {
    report.window = *window;
  } else {
    double span = std::numeric_limits<double>::infinity();
    for (const auto& [n, c] : curves) span = std::min(span, c.x.back() - c.x.front());
    report.window = 0.2 * span;
  }
  require(report.window > 0.0, "collapse_curves: window must be positive");
  for (const auto& [n, c] : curves) {
    const double sx = std::pow(static_cast<double>(n), rule.abscissa_exponent);
    const double sy = std::pow(static_cast<double>(n), rule.ordinate_exponent);
    Curve t{std::vector<double>(c.size()), std::vector<double>(c.size())};
    for (std::size_t i = 0; i < c.size(); ++i) {
      t.x[i] = (c.x[i] - rule.center(n)) * sx;
      t.y[i] = c.y[i] * sy;
    }
    report.transformed.emplace(n, std::move(t));
  }
  // Per-curve windows |x - center(n)| <= w intersect in the narrowest |x'| <= w n^beta.
  double half = std::numeric_limits<double>::infinity();
  for (const auto& [n, c] : curves)
    half = std::min(half, report.window * std::pow(static_cast<double>(n), rule.abscissa_exponent));
  double residual = 0.0;
  for (auto ia = report.transformed.begin(); ia != report.transformed.end(); ++ia) {
    for (auto ib = std::next(ia); ib != report.transformed.end(); ++ib) {
      const Curve& a = ia->second;
      const Curve& b = ib->second;
      const double lo = std::max({a.x.front(), b.x.front(), -half});
      const double hi = std::min({a.x.back(), b.x.back(), half});
      if (!(hi > lo)) throw NumericalError("collapse_curves: curves do not overlap inside the window");
      for (double x : merged_grid(a, b, lo, hi))
        residual = std::max(residual, std::abs(a.interpolate(x) - b.interpolate(x)));
    }
  }
  report.residual = residual;
  return report;
}

}  // namespace stabscope
