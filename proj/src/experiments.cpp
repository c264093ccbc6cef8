#include "stabscope/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "stabscope/error.hpp"
#include "stabscope/hamiltonian.hpp"
#include "stabscope/oracles.hpp"
#include "stabscope/parallel.hpp"
#include "stabscope/sre.hpp"

namespace stabscope {

MeanStderr mean_and_stderr(std::span<const double> samples) {
  require(!samples.empty(), "mean_and_stderr: no samples");
  double s = 0.0, c = 0.0;
  for (double v : samples) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  const double n = static_cast<double>(samples.size());
  const double mean = s / n;
  if (samples.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  c = 0.0;
  for (double v : samples) {
    const double y = (v - mean) * (v - mean) - c;
    const double t = ss + y;
    c = (t - ss) - y;
    ss = t;
  }
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

MeanStderr annealed(std::span<const double> sre_samples, double alpha) {
  require(std::abs(alpha - 1.0) > 1e-12, "annealed: alpha must differ from 1");
  std::vector<double> powers(sre_samples.size());
  for (std::size_t i = 0; i < powers.size(); ++i) powers[i] = std::exp((1.0 - alpha) * sre_samples[i]);
  const MeanStderr p = mean_and_stderr(powers);
  // Delta method: d/dP [ln P / (1 - alpha)] = 1 / ((1 - alpha) P).
  return {std::log(p.mean) / (1.0 - alpha), p.std_error / (std::abs(1.0 - alpha) * p.mean)};
}

std::string param_kind(const SweepConfig& config) {
  if (config.model == Model::clifford_t) return config.t_counts.empty() ? "q" : "n_t";
  return "t";
}

namespace {

// One parameter point of a sweep for a fixed n.
struct Point {
  double param;  // as requested
  int t_count;   // clifford_t only
  double t;      // evolution models only
};

struct Layout {
  std::size_t alphas;
  bool fidelity;
  bool dmin;
  std::size_t per_point() const { return alphas + (fidelity ? 1 : 0) + (dmin ? 1 : 0); }
};

std::vector<Point> points_for(const SweepConfig& config, int n) {
  std::vector<Point> pts;
  if (config.model == Model::clifford_t) {
    if (!config.t_counts.empty()) {
      for (int k : config.t_counts) {
        require(k >= 0, "run_sweep: negative T count");
        pts.push_back(Point{static_cast<double>(k), k, 0.0});
      }
    } else {
      for (double q : config.params) {
        require(q >= 0.0, "run_sweep: negative q");
        pts.push_back(Point{q, static_cast<int>(std::lround(q * n)), 0.0});
      }
    }
  } else {
    for (double t : config.params) {
      require(t >= 0.0, "run_sweep: negative t");
      pts.push_back(Point{t, 0, t});
    }
  }
  return pts;
}

// Fills values[p * layout.per_point() + slot] for one instance.
void measure_state(const StateVector& psi, const SweepConfig& config, const Layout& layout, std::size_t p,
                   double fid, std::vector<double>& values, HistogramAccumulator* hist) {
  const PauliSpectrum spectrum = pauli_spectrum(psi);
  std::size_t base = p * layout.per_point();
  for (std::size_t a = 0; a < layout.alphas; ++a) values[base + a] = sre(spectrum, config.alphas[a]).value;
  std::size_t slot = base + layout.alphas;
  if (layout.fidelity) values[slot++] = fid;
  if (layout.dmin) values[slot++] = min_relative_entropy(psi).value;
  if (hist) hist->add(spectrum);
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, const std::function<void(const SweepResult&)>& on_progress) {
  require(!config.ns.empty(), "run_sweep: no system sizes");
  require(config.instances >= 1, "run_sweep: need at least one instance");
  require(!config.alphas.empty(), "run_sweep: no Renyi orders");
  if (config.model == Model::clifford_t)
    require(!config.params.empty() || !config.t_counts.empty(), "run_sweep: empty parameter grid");
  else
    require(!config.params.empty(), "run_sweep: empty parameter grid");
  for (double a : config.alphas) require(a >= 0.0, "run_sweep: negative Renyi order");
  for (int n : config.ns) {
    require(n >= 1, "run_sweep: n must be positive");
    guard(n <= kSpectrumMaxQubits, "run_sweep: n exceeds the dense spectrum limit");
    if (config.model == Model::gue) guard(n <= kDenseHamiltonianMaxQubits, "run_sweep: n exceeds the GUE limit");
    if (config.model == Model::random_basis)
      require(config.depth >= config.depth_factor * n, "run_sweep: depth too small for n");
  }
  SweepResult result;
  result.config = config;
  const std::string model = model_name(config.model);
  const std::string kind = param_kind(config);

  for (int n : config.ns) {
    const std::vector<Point> pts = points_for(config, n);
    const Layout layout{config.alphas.size(), config.record_fidelity && config.model != Model::clifford_t,
                        config.record_dmin && n <= kStabilizerEnumerationMaxQubits};
    const std::size_t stride = pts.size() * layout.per_point();
    std::vector<std::vector<double>> per_instance(config.instances, std::vector<double>(stride));
    const int workers = std::max(1, std::min(config.threads, config.instances));
    std::vector<std::vector<HistogramAccumulator>> hists(
        config.record_histogram ? workers : 0,
        std::vector<HistogramAccumulator>(pts.size(),
                                          HistogramAccumulator(config.histogram_bins, config.histogram_lower_edge)));

    parallel_for(static_cast<std::size_t>(config.instances), workers,
                 [&](std::size_t begin, std::size_t end, int w) {
      for (std::size_t inst = begin; inst < end; ++inst) {
        const std::uint64_t seed =
            derive_seed(config.seed, {static_cast<std::uint64_t>(config.model), static_cast<std::uint64_t>(n), inst});
        auto& values = per_instance[inst];
        auto hist = [&](std::size_t p) { return config.record_histogram ? &hists[w][p] : nullptr; };
        if (config.model == Model::clifford_t) {
          std::vector<std::size_t> order(pts.size());
          for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
          std::stable_sort(order.begin(), order.end(),
                           [&](std::size_t a, std::size_t b) { return pts[a].t_count < pts[b].t_count; });
          CliffordTTrajectory traj(n, seed);
          for (std::size_t p : order) {
            while (traj.t_count() < pts[p].t_count) traj.step();
            measure_state(traj.state(), config, layout, p, 0.0, values, hist(p));
          }
        } else if (config.model == Model::random_basis) {
          const RandomBasisCircuit circuit(n, config.depth, seed);
          const StateVector initial = circuit.state_at(0.0);
          for (std::size_t p = 0; p < pts.size(); ++p) {
            const StateVector psi = circuit.state_at(pts[p].t);
            measure_state(psi, config, layout, p, fidelity(initial, psi), values, hist(p));
          }
        } else {
          Rng rng(seed);
          const Propagator prop(sample_gue(n, rng));
          const StateVector initial = StateVector::zero(n);
          for (std::size_t p = 0; p < pts.size(); ++p) {
            const StateVector psi = prop.evolve(initial, pts[p].t);
            measure_state(psi, config, layout, p, fidelity(initial, psi), values, hist(p));
          }
        }
      }
    });

    std::vector<double> samples(config.instances);
    auto summarize = [&](std::size_t slot) {
      for (int i = 0; i < config.instances; ++i) samples[i] = per_instance[i][slot];
      return mean_and_stderr(samples);
    };
    for (std::size_t p = 0; p < pts.size(); ++p) {
      const std::size_t base = p * layout.per_point();
      for (std::size_t a = 0; a < layout.alphas; ++a) {
        const MeanStderr ms = summarize(base + a);
        result.rows.push_back(
            SweepRow{model, n, pts[p].param, kind, "sre", config.alphas[a], ms.mean, ms.std_error, config.instances});
        const double alpha = config.alphas[a];
        if (std::abs(alpha - 1.0) > 1e-12) {
          const MeanStderr an = annealed(samples, alpha);
          result.rows.push_back(
              SweepRow{model, n, pts[p].param, kind, "sre_annealed", alpha, an.mean, an.std_error, config.instances});
        }
      }
      std::size_t slot = base + layout.alphas;
      if (layout.fidelity) {
        const MeanStderr ms = summarize(slot++);
        result.rows.push_back(SweepRow{model, n, pts[p].param, kind, "fidelity", 0.0, ms.mean, ms.std_error,
                                       config.instances});
      }
      if (layout.dmin) {
        const MeanStderr ms = summarize(slot++);
        result.rows.push_back(
            SweepRow{model, n, pts[p].param, kind, "dmin", 0.0, ms.mean, ms.std_error, config.instances});
      }
      if (config.model == Model::clifford_t)
        result.rows.push_back(SweepRow{model, n, pts[p].param, kind, "q_realized", 0.0,
                                       static_cast<double>(pts[p].t_count) / n, 0.0, config.instances});
      if (config.record_histogram) {
        HistogramAccumulator merged(config.histogram_bins, config.histogram_lower_edge);
        for (const auto& h : hists) merged.merge(h[p]);
        SpectrumHistogram h = merged.result();
        h.model = model;
        h.param_kind = kind;
        h.parameter = pts[p].param;
        result.histograms.push_back(std::move(h));
      }
    }
    if (on_progress) on_progress(result);
  }
  result.complete = true;
  return result;
}

std::map<int, Curve> sre_curves(std::span<const SweepRow> rows, double alpha) {
  std::map<int, std::vector<std::pair<double, double>>> points;
  for (const auto& r : rows) {
    if (r.measure != "sre" || std::abs(r.alpha - alpha) > 1e-12) continue;
    double x, y;
    if (r.model == "clifford_t") {
      // Simulated density grids are realized as integer T counts; analytic rows
      // (instances = 0) are evaluated at the requested q.
      if (r.param_kind == "n_t") {
        x = r.param / r.n;
      } else {
        x = r.instances > 0 ? std::round(r.param * r.n) / r.n : r.param;
      }
      y = r.mean / r.n;
    } else {
      x = r.param * r.param;
      y = r.mean;
    }
    points[r.n].emplace_back(x, y);
  }
  std::map<int, Curve> curves;
  for (auto& [n, pts] : points) {
    std::sort(pts.begin(), pts.end());
    Curve c;
    for (const auto& [x, y] : pts) {
      if (!c.x.empty() && std::abs(c.x.back() - x) <= 1e-12) continue;
      c.x.push_back(x);
      c.y.push_back(y);
    }
    curves.emplace(n, std::move(c));
  }
  return curves;
}

ModelComparison compare_models(int n, const std::vector<double>& times, int depth, int instances,
                               std::uint64_t seed, int bins, int threads, double lower_edge) {
  require(!times.empty(), "compare_models: no times");
  SweepConfig base;
  base.ns = {n};
  base.params = times;
  base.instances = instances;
  base.depth = depth;
  base.seed = seed;
  base.threads = threads;
  base.record_histogram = true;
  base.histogram_bins = bins;
  base.histogram_lower_edge = lower_edge;
  SweepConfig gue_cfg = base;
  gue_cfg.model = Model::gue;
  SweepConfig rb_cfg = base;
  rb_cfg.model = Model::random_basis;
  const SweepResult gue = run_sweep(gue_cfg);
  const SweepResult rb = run_sweep(rb_cfg);
  ModelComparison cmp;
  cmp.n = n;
  cmp.depth = depth;
  cmp.instances = instances;
  cmp.times = times;
  cmp.gue = gue.histograms;
  cmp.random_basis = rb.histograms;
  for (std::size_t i = 0; i < times.size(); ++i)
    cmp.total_variation.push_back(total_variation(cmp.gue[i], cmp.random_basis[i]));
  return cmp;
}

}  // namespace stabscope
