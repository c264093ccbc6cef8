#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stabscope {

struct Curve {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
  // Linear interpolation; x must lie within [x.front(), x.back()].
  double interpolate(double at) const;
};

// Central differences inside, one-sided at the ends. The grid must be uniform
// to relative tolerance 1e-9 (std::invalid_argument otherwise).
Curve estimate_derivative(const Curve& curve);

// x' = (x - offset(n)) / divisor(n).
struct AxisMap {
  std::string name = "none";
  std::function<double(int)> offset = [](int) { return 0.0; };
  std::function<double(int)> divisor = [](int) { return 1.0; };

  double operator()(int n, double x) const { return (x - offset(n)) / divisor(n); }

  static AxisMap none();
  static AxisMap shift(std::function<double(int)> center);
  static AxisMap scale();  // x / n
};

struct PairCrossing {
  int n_a = 0;
  int n_b = 0;
  bool degenerate = false;
  double x = 0.0;                 // selected crossing in the aligned variable
  std::vector<double> candidates; // every sign change of the difference
};

struct CrossingReport {
  double alpha = 0.0;
  std::string alignment;
  std::vector<PairCrossing> pairs;
  double pooled = 0.0;  // unweighted mean over non-degenerate pairs
  double spread = 0.0;  // max - min over non-degenerate pairs
  std::optional<double> reference;
  std::optional<std::pair<double, double>> window;
};

// Adjacent pairs in increasing n. Among several sign changes the selected one
// maximizes min(|net area before|, |net area after|) of the difference curve,
// counting only changes whose two sides carry opposite net sign; this skips
// noise crossings on plateaus where the curves coincide. Throws NumericalError when a non-degenerate
// pair has no crossing inside the common domain (and window, if given).
CrossingReport find_crossing(const std::map<int, Curve>& curves, const AxisMap& alignment, double alpha,
                             std::optional<double> reference = std::nullopt,
                             std::optional<std::pair<double, double>> window = std::nullopt);

// x' = (x - center(n)) n^abscissa_exponent, y' = y n^ordinate_exponent.
struct CollapseRule {
  std::function<double(int)> center = [](int) { return 0.0; };
  double abscissa_exponent = 0.0;
  double ordinate_exponent = 0.0;
};

struct CollapseReport {
  double alpha = 0.0;
  double abscissa_exponent = 0.0;
  double ordinate_exponent = 0.0;
  double window = 0.0;  // half-width in the original variable
  double residual = 0.0;  // sup |y'_a - y'_b| over all pairs on the common window
  std::map<int, Curve> transformed;
};

// window: half-width around center(n) in the original variable; defaults to 20%
// of the narrowest grid span.
CollapseReport collapse_curves(const std::map<int, Curve>& curves, const CollapseRule& rule, double alpha,
                               std::optional<double> window = std::nullopt);

}  // namespace stabscope
