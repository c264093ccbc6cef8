#include "stabscope/sre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "stabscope/error.hpp"

namespace stabscope {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Kahan-compensated sum.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0, c_ = 0.0;
};

bool is_one(double alpha) { return std::abs(alpha - 1.0) < 1e-12; }

}  // namespace

double purity_sum(const PauliSpectrum& spectrum) {
  KahanSum s;
  for (double v : spectrum.values) s.add(v);
  return s.value() / std::ldexp(1.0, spectrum.n);
}

SreValue sre(const PauliSpectrum& spectrum, double alpha) {
  require(alpha >= 0.0 && std::isfinite(alpha), "sre: alpha must be finite and non-negative");
  const int n = spectrum.n;
  require(spectrum.values.size() == (std::size_t{1} << (2 * n)), "sre: spectrum length is not 4^n");
  if (std::abs(purity_sum(spectrum) - 1.0) > kPurityTolerance)
    throw NumericalError("sre: spectrum violates the pure-state sum rule");
  const double ln_dim = n * kLn2;
  double value;
  if (alpha == 0.0) {
    std::size_t count = 0;
    for (double v : spectrum.values) count += v > kM0ZeroThreshold;
    value = std::log(static_cast<double>(count)) - ln_dim;
  } else if (is_one(alpha)) {
    KahanSum s;
    for (double v : spectrum.values)
      if (v > 0.0) s.add(v * std::log(v));
    value = -s.value() / std::ldexp(1.0, n);
  } else {
    double max_log = -std::numeric_limits<double>::infinity();
    for (double v : spectrum.values)
      if (v > 0.0) max_log = std::max(max_log, alpha * std::log(v));
    KahanSum s;
    for (double v : spectrum.values)
      if (v > 0.0) s.add(std::exp(alpha * std::log(v) - max_log));
    value = (max_log + std::log(s.value()) - ln_dim) / (1.0 - alpha);
  }
  return SreValue{alpha, value, n, false};
}

double m2_clifford_t_exact(int n, int n_t) {
  require(n >= 1 && n <= 500, "m2_clifford_t_exact: n out of range");
  require(n_t >= 0, "m2_clifford_t_exact: negative T count");
  const double d = std::ldexp(1.0, n);
  const double d2 = d * d;
  const double b = (-4.0 + 3.0 * (d2 - d)) / (4.0 * (d2 - 1.0));
  return -std::log((4.0 + (d - 1.0) * std::pow(b, n_t)) / (3.0 + d));
}

SreValue m2_clifford_t_asymptotic(int n, double q) {
  require(n >= 1 && q >= 0.0, "m2_clifford_t_asymptotic: invalid arguments");
  const double value = -std::log(4.0 * std::ldexp(1.0, -n) + std::pow(0.75, q * n));
  return SreValue{2.0, value, n, value < 0.0 || value > n * kLn2};
}

double sre_per_tgate(double alpha) {
  require(alpha >= 0.0, "sre_per_tgate: alpha must be non-negative");
  if (alpha == 0.0) return kLn2;
  if (is_one(alpha)) return kLn2 / 2.0;
  return std::log(std::exp2(-alpha) + 0.5) / (1.0 - alpha);
}

SreMax sre_max(double alpha, int n) {
  require(alpha >= 0.0 && n >= 1, "sre_max: invalid arguments");
  const double ln_dim = n * kLn2;
  double uniform;
  if (is_one(alpha)) {
    uniform = (1.0 - std::ldexp(1.0, -2 * n)) * ln_dim;
  } else {
    // ln(2^{-n} + 2^{n(1-alpha)}) evaluated as n(1-alpha)ln2 + log1p(2^{-n - n(1-alpha)}).
    const double e = n * (1.0 - alpha);
    uniform = (e * kLn2 + std::log1p(std::exp2(-n - e))) / (1.0 - alpha);
  }
  const double limit = alpha <= 2.0 ? ln_dim : ln_dim / (alpha - 1.0);
  return SreMax{uniform, limit};
}

double sre_linear_model(int n, int n_t, double alpha) {
  require(n_t >= 0, "sre_linear_model: negative T count");
  return std::min(n_t * sre_per_tgate(alpha), sre_max(alpha, n).limit);
}

double sre_haar(double alpha, int n) {
  require(alpha >= 0.0 && !is_one(alpha) && n >= 1, "sre_haar: requires alpha >= 0, alpha != 1");
  const double d = std::ldexp(1.0, n);
  // Gaussian beta with variance 1/(2^n + 1) on the 4^n - 1 non-identity strings.
  const double log_term = std::log(d * d - 1.0) + alpha * std::log(2.0 / (d + 1.0)) +
                          std::lgamma(alpha + 0.5) - 0.5 * std::log(std::numbers::pi) - n * kLn2;
  return std::log(std::exp(log_term) + 1.0 / d) / (1.0 - alpha);
}

CriticalPoint critical_tgate_density(double alpha) {
  require(alpha >= 0.0, "critical_tgate_density: alpha must be non-negative");
  CriticalPoint c{alpha, CriticalKind::tgate_density, 0.0, "q = N_T / n"};
  if (alpha == 0.0) {
    c.value = 1.0;
  } else if (alpha <= 2.0) {
    c.value = kLn2 / sre_per_tgate(alpha);
  } else {
    c.value = -kLn2 / std::log(std::exp2(-alpha) + 0.5);
  }
  return c;
}

CriticalPoint critical_time_squared(double alpha, int n) {
  require(alpha >= 0.0 && n >= 1, "critical_time_squared: invalid arguments");
  CriticalPoint c{alpha, CriticalKind::time_squared, 0.0, ""};
  if (alpha == 0.0) {
    c.value = 0.0;
    c.scaling_note = "immediate saturation";
  } else if (alpha < 1.0) {
    c.value = 0.5;
    c.scaling_note = "n-independent";
  } else if (is_one(alpha)) {
    c.value = 0.5;
    c.scaling_note = "possible logarithmic corrections";
  } else if (alpha <= 2.0) {
    c.value = (alpha - 1.0) / (2.0 * alpha) * n * kLn2;
    c.scaling_note = "linear in n";
  } else {
    c.value = n * kLn2 / (2.0 * alpha);
    c.scaling_note = "linear in n";
  }
  return c;
}

double m2_random_basis_exact(double theta, int depth, int n) {
  require(depth >= 1 && n >= 1 && n <= 500, "m2_random_basis_exact: invalid arguments");
  const double d = std::ldexp(1.0, n);
  const double d2 = d * d;
  const double b = (7.0 * d2 - 3.0 * d + d * (d + 3.0) * std::cos(4.0 * theta) - 8.0) / (8.0 * (d2 - 1.0));
  return -std::log((4.0 + (d - 1.0) * std::pow(b, depth)) / (3.0 + d));
}

double m2_random_basis_exact_t(double t, int depth, int n) {
  return m2_random_basis_exact(2.0 * t / std::sqrt(static_cast<double>(depth)), depth, n);
}

double m2_random_basis_depth_limit(double t, int n) {
  const double d = std::ldexp(1.0, n);
  const double rate = d * (d + 3.0) / (d * d - 1.0);
  return -std::log((4.0 + (d - 1.0) * std::exp(-4.0 * t * t * rate)) / (3.0 + d));
}

double m2_random_basis_asymptotic(double t, int n) {
  return n * kLn2 - std::log(4.0 + std::ldexp(1.0, n) * std::exp(-4.0 * t * t));
}

double gue_sre_from_fidelity(double alpha, int n, double f) {
  require(alpha >= 0.0 && f >= 0.0 && f <= 1.0 + 1e-12, "gue_sre_from_fidelity: invalid arguments");
  f = std::min(f, 1.0);
  const double f2 = f * f;
  const double rest = 1.0 - f2;
  if (is_one(alpha)) {
    double v = 0.0;
    if (f2 > 0.0) v -= f2 * std::log(f2);
    if (rest > 0.0) v -= rest * (std::log(rest) - n * kLn2);
    return v;
  }
  if (alpha == 0.0) return rest > 0.0 ? std::log1p(std::ldexp(1.0, n)) : 0.0;
  return std::log(std::pow(f2, alpha) + std::exp2(n * (1.0 - alpha)) * std::pow(rest, alpha)) / (1.0 - alpha);
}

double gue_sre_approx(double alpha, int n, double t) {
  require(alpha >= 0.0 && n >= 1 && t >= 0.0, "gue_sre_approx: invalid arguments");
  const double cap = sre_max(alpha, n).limit;
  const double t2 = t * t;
  if (t2 == 0.0) return 0.0;
  double v;
  if (alpha == 0.0) {
    v = cap;
  } else if (alpha < 1.0) {
    const double switch_value = std::exp2(n * (1.0 - alpha)) * std::pow(2.0 * t2, alpha);
    if (switch_value < 1.0) {
      v = std::exp2(alpha) / (1.0 - alpha) * std::exp2(n * (1.0 - alpha)) * std::pow(t2, alpha);
    } else {
      v = alpha / (1.0 - alpha) * std::log(2.0 * t2) + n * kLn2;
    }
  } else if (is_one(alpha)) {
    v = 2.0 * t2 * (n * kLn2 - std::log(2.0 * t2));
  } else {
    v = 2.0 * alpha / (alpha - 1.0) * t2;
  }
  return std::min(v, cap);
}

}  // namespace stabscope
