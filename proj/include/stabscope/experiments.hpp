#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stabscope/analysis.hpp"
#include "stabscope/models.hpp"
#include "stabscope/spectrum.hpp"

namespace stabscope {

struct SweepConfig {
  Model model = Model::clifford_t;
  std::vector<int> ns;
  // q = N_T/n for clifford_t (N_T = round(q n)); t for the evolution models.
  std::vector<double> params;
  // clifford_t only: explicit T counts, used instead of params when non-empty.
  std::vector<int> t_counts;
  std::vector<double> alphas{2.0};
  int instances = 20;
  int depth = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  bool record_fidelity = false;
  bool record_dmin = false;
  bool record_histogram = false;
  int histogram_bins = 40;
  double histogram_lower_edge = 1e-20;
  // Random-basis sweeps require depth >= depth_factor * n.
  int depth_factor = 50;
};

struct SweepRow {
  std::string model;
  int n = 0;
  double param = 0.0;
  std::string param_kind;
  std::string measure = "sre";  // sre, fidelity, dmin, q_realized
  double alpha = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
  int instances = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<SpectrumHistogram> histograms;
  bool complete = false;
};

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};
// Kahan-summed mean and the standard error of the mean (sample deviation / sqrt(N)).
MeanStderr mean_and_stderr(std::span<const double> samples);
// Ensemble SRE taken on the power sum rather than on the entropy,
// (1 - alpha)^{-1} ln mean(exp((1 - alpha) M_alpha)); this is the average that the
// closed-form Clifford+T result describes. The error is propagated to first order.
MeanStderr annealed(std::span<const double> sre_samples, double alpha);

std::string param_kind(const SweepConfig& config);

// Per-instance seeds are derive_seed(seed, {model, n, instance}); instances run
// in parallel and are reduced in index order, so results do not depend on threads.
// on_progress is called after each n with the rows accumulated so far.
SweepResult run_sweep(const SweepConfig& config,
                      const std::function<void(const SweepResult&)>& on_progress = {});

// SRE curves keyed by n. clifford_t: x = realized q (the requested q for rows with
// zero instances), y = M_alpha / n;
// evolution models: x = t^2, y = M_alpha.
std::map<int, Curve> sre_curves(std::span<const SweepRow> rows, double alpha);

struct ModelComparison {
  int n = 0;
  int depth = 0;
  int instances = 0;
  std::vector<double> times;
  std::vector<double> total_variation;
  std::vector<SpectrumHistogram> gue;
  std::vector<SpectrumHistogram> random_basis;
};

ModelComparison compare_models(int n, const std::vector<double>& times, int depth, int instances,
                               std::uint64_t seed, int bins = 40, int threads = 1,
                               double lower_edge = 1e-20);

}  // namespace stabscope
