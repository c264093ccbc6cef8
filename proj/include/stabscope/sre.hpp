#pragma once

#include <string>

#include "stabscope/spectrum.hpp"

namespace stabscope {

// Natural logarithms throughout.
struct SreValue {
  double alpha = 0.0;
  double value = 0.0;
  int n = 0;
  // Set when an approximate closed form leaves the physical range [0, n ln 2];
  // the value is reported as computed, not clamped.
  bool outside_physical_range = false;
};

constexpr double kM0ZeroThreshold = 1e-10;
constexpr double kPurityTolerance = 1e-9;

// Renyi order alpha >= 0 on a pure-state spectrum; alpha = 0 counts beta^2 > 1e-10,
// alpha = 1 is the Shannon limit, other orders use log-sum-exp.
SreValue sre(const PauliSpectrum& spectrum, double alpha);

// sum over the spectrum of the monotone family, for diagnostics
double purity_sum(const PauliSpectrum& spectrum);

// Clifford+T closed forms.
double m2_clifford_t_exact(int n, int n_t);
SreValue m2_clifford_t_asymptotic(int n, double q);
// Increment per T gate on a large register: (1-alpha)^{-1} ln(2^{-alpha} + 1/2),
// ln2/2 at alpha = 1 and ln 2 at alpha = 0.
double sre_per_tgate(double alpha);
double sre_linear_model(int n, int n_t, double alpha);

struct SreMax {
  double uniform_ansatz;  // (1-alpha)^{-1} ln(2^{-n} + 2^{n(1-alpha)})
  double limit;           // n ln 2 for alpha <= 2, n ln 2/(alpha-1) beyond
};
SreMax sre_max(double alpha, int n);

// Haar average; alpha != 1.
double sre_haar(double alpha, int n);

enum class CriticalKind { tgate_density, time_squared };

struct CriticalPoint {
  double alpha = 0.0;
  CriticalKind kind = CriticalKind::tgate_density;
  double value = 0.0;
  std::string scaling_note;
};

CriticalPoint critical_tgate_density(double alpha);
CriticalPoint critical_time_squared(double alpha, int n);

// Random-basis model with rotation angle theta and depth d.
double m2_random_basis_exact(double theta, int depth, int n);
double m2_random_basis_exact_t(double t, int depth, int n);
// Infinite-depth limit of the exact form at fixed t.
double m2_random_basis_depth_limit(double t, int n);
// Large-n, infinite-depth form: n ln2 - ln(4 + 2^n e^{-4t^2}).
double m2_random_basis_asymptotic(double t, int n);

// Two-peak evaluation from the fidelity F = |<psi(0)|psi(t)>|.
double gue_sre_from_fidelity(double alpha, int n, double fidelity_amplitude);
// Short-time piecewise approximation for the GUE evolution, clamped at sre_max(...).limit.
double gue_sre_approx(double alpha, int n, double t);

}  // namespace stabscope
