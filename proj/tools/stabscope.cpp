// stabscope command-line front end: sweeps, analysis, closed forms, oracles,
// spectrum dumps and fidelity certification, each run leaving a replayable manifest.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "stabscope/analysis.hpp"
#include "stabscope/certification.hpp"
#include "stabscope/error.hpp"
#include "stabscope/experiments.hpp"
#include "stabscope/io.hpp"
#include "stabscope/models.hpp"
#include "stabscope/oracles.hpp"
#include "stabscope/parallel.hpp"
#include "stabscope/spectrum.hpp"
#include "stabscope/sre.hpp"

#ifndef STABSCOPE_VERSION
#define STABSCOPE_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace stabscope;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitNumerical = 4;

// ---------------------------------------------------------------------------
// Argument helpers

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

// "lo:hi:step" (endpoints included within half a step), "lo:hi" (step 1),
// or a comma-separated list; items of a list may themselves be ranges.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty entry in grid '" + text + "'");
    std::vector<std::string> parts;
    std::stringstream ps(item);
    std::string part;
    while (std::getline(ps, part, ':')) parts.push_back(trim(part));
    if (parts.size() == 1) {
      out.push_back(parse_number(parts[0]));
      continue;
    }
    if (parts.size() > 3) throw ParseError("grid '" + item + "' is not lo:hi:step");
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    const double step = parts.size() == 3 ? parse_number(parts[2]) : 1.0;
    if (!(step > 0.0) || hi < lo) throw ParseError("grid '" + item + "' needs lo <= hi and step > 0");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 0.5));
    for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  }
  if (out.empty()) throw ParseError("empty grid");
  return out;
}

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_grid(text)) {
    if (std::abs(v - std::round(v)) > 1e-9) throw ParseError("expected integers in '" + text + "'");
    out.push_back(static_cast<int>(std::lround(v)));
  }
  return out;
}

Model cli_model(std::string name) {
  for (auto& c : name)
    if (c == '-') c = '_';
  return parse_model(name);
}

std::string cli_model_name(Model m) {
  std::string s = model_name(m);
  for (auto& c : s)
    if (c == '_') c = '-';
  return s;
}

// Relative output paths land in $STABSCOPE_OUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("STABSCOPE_OUT_DIR"); dir != nullptr && *dir != '\0') p = fs::path(dir) / p;
  }
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p;
}

fs::path sibling(const fs::path& base, const std::string& suffix) {
  fs::path stem = base;
  stem.replace_extension();
  return fs::path(stem.string() + suffix);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Doubles are printed in shortest round-trip form, which loses no precision.
std::string dump_json(const Json& j) {
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Run bookkeeping

struct Run {
  std::string subcommand;
  std::vector<std::string> argv;
  Json config = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  // Writes to the resolved file, or to stdout when no path was requested.
  void emit(const std::string& requested, const std::string& text) {
    if (requested.empty()) {
      std::cout << text;
      return;
    }
    const fs::path p = resolve_output(requested);
    write_text(p, text);
    outputs.push_back(p.string());
  }

  void emit_file(const fs::path& p, const std::string& text) {
    write_text(p, text);
    outputs.push_back(p.string());
  }

  // Manifest next to the primary output; nothing is written for stdout-only runs.
  void finish() const {
    if (outputs.empty()) return;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json m{{"subcommand", subcommand},
           {"argv", argv},
           {"config", config},
           {"seed", seed ? Json(*seed) : Json(nullptr)},
           {"version", STABSCOPE_VERSION},
           {"outputs", outputs},
           {"wall_clock_seconds", seconds}};
    write_text(sibling(outputs.front(), ".manifest.json"), dump_json(m));
  }
};

// State selection shared by oracle, spectrum and certify.
struct StateOptions {
  std::string state_file;
  std::string model = "gue";
  int n = 0;
  double t = 0.0;
  int nt = 0;
  int depth = 1000;
  std::uint64_t seed = 1;

  void add(CLI::App* app) {
    app->add_option("--state-file", state_file, "StateVector JSON ({\"n\":..,\"amplitudes\":[[re,im],..]})");
    app->add_option("--model", model, "clifford-t | random-basis | gue (when no --state-file)");
    app->add_option("--n", n, "qubit count for a generated state");
    app->add_option("--t", t, "evolution time (random-basis, gue)");
    app->add_option("--nt", nt, "T-gate count (clifford-t)");
    app->add_option("--depth", depth, "random-basis layer count");
    app->add_option("--seed", seed, "seed for the generated state");
  }

  Json describe() const {
    if (!state_file.empty()) return Json{{"state_file", state_file}};
    return Json{{"model", model}, {"n", n}, {"t", t}, {"nt", nt}, {"depth", depth}, {"seed", seed}};
  }

  StateVector build() const {
    if (!state_file.empty()) {
      try {
        return state_from_json(Json::parse(read_text(state_file)));
      } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed state file: ") + e.what());
      }
    }
    if (n < 1) throw std::invalid_argument("--n must be given (>= 1) when no --state-file is used");
    switch (cli_model(model)) {
      case Model::clifford_t: return build_clifford_t_state(n, nt, seed).state;
      case Model::random_basis: return build_random_basis_state(n, t, depth, seed).state;
      case Model::gue: return build_gue_state(n, t, seed).state;
    }
    throw std::logic_error("unreachable");
  }
};

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string model = "clifford-t";
  std::string ns;
  std::string q, t, t2, nt;
  std::string alphas = "2";
  int instances = 20;
  std::uint64_t seed = 1;
  int depth = 1000;
  std::vector<std::string> record;
  int bins = 40;
  double lower_edge = 1e-20;
  std::string out;
};

void cmd_sweep(const SweepOptions& o, int threads, Run& run) {
  SweepConfig c;
  c.model = cli_model(o.model);
  c.ns = parse_int_grid(o.ns);
  c.alphas = parse_grid(o.alphas);
  c.instances = o.instances;
  c.seed = o.seed;
  c.depth = o.depth;
  c.threads = threads;
  c.histogram_bins = o.bins;
  c.histogram_lower_edge = o.lower_edge;
  const int grids = !o.q.empty() + !o.t.empty() + !o.t2.empty() + !o.nt.empty();
  if (grids != 1) throw std::invalid_argument("sweep: give exactly one of --q, --nt, --t, --t2");
  if (c.model == Model::clifford_t) {
    if (!o.q.empty()) c.params = parse_grid(o.q);
    else if (!o.nt.empty()) c.t_counts = parse_int_grid(o.nt);
    else throw std::invalid_argument("sweep: clifford-t takes --q or --nt");
  } else {
    if (!o.t.empty()) {
      c.params = parse_grid(o.t);
    } else if (!o.t2.empty()) {
      for (double v : parse_grid(o.t2)) {
        if (v < 0.0) throw std::invalid_argument("sweep: --t2 values must be non-negative");
        c.params.push_back(std::sqrt(v));
      }
    } else {
      throw std::invalid_argument("sweep: evolution models take --t or --t2");
    }
  }
  for (const auto& r : o.record) {
    if (r == "hist") c.record_histogram = true;
    else if (r == "dmin") c.record_dmin = true;
    else if (r == "fidelity") c.record_fidelity = true;
    else throw std::invalid_argument("sweep: unknown --record value '" + r + "' (hist, dmin, fidelity)");
  }

  run.seed = c.seed;
  run.config = Json{{"model", cli_model_name(c.model)}, {"n", c.ns},           {"params", c.params},
                    {"t_counts", c.t_counts},           {"alphas", c.alphas},   {"instances", c.instances},
                    {"depth", c.depth},                 {"record", o.record},   {"histogram_bins", c.histogram_bins},
                    {"histogram_lower_edge", c.histogram_lower_edge}};

  const auto metadata = sweep_metadata(c);
  const bool to_file = !o.out.empty();
  const fs::path out = to_file ? resolve_output(o.out) : fs::path();
  auto write_all = [&](const SweepResult& r, bool complete) {
    std::ostringstream csv;
    write_sweep_csv(csv, r.rows, metadata, complete);
    std::ostringstream measures;
    write_measures_csv(measures, r.rows, metadata, complete);
    if (to_file) {
      write_text(out, csv.str());
      write_text(sibling(out, ".measures.csv"), measures.str());
    }
    return std::make_pair(csv.str(), measures.str());
  };
  // Partial files after each n let long sweeps be inspected; "# complete" marks the end.
  const SweepResult result = run_sweep(c, [&](const SweepResult& partial) { write_all(partial, false); });
  const auto [csv, measures] = write_all(result, true);
  if (!to_file) {
    std::cout << csv;
    return;
  }
  run.outputs.push_back(out.string());
  run.outputs.push_back(sibling(out, ".measures.csv").string());
  for (const auto& h : result.histograms) {
    std::ostringstream hs;
    write_histogram_csv(hs, h);
    run.emit_file(sibling(out, fmt::format(".hist.n{}.{}{}.csv", h.n, h.param_kind, format_double(h.parameter))),
                  hs.str());
  }
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::string in;
  std::string mode = "crossing";
  double alpha = 2.0;
  std::string align = "none";
  std::optional<double> center;
  bool center_tc2 = false;
  std::optional<double> reference;
  std::string window;
  double beta = 0.0;
  double gamma = 0.0;
  std::string out;
};

std::function<double(int)> center_function(const AnalyzeOptions& o) {
  if (o.center_tc2) {
    const double alpha = o.alpha;
    return [alpha](int n) { return critical_time_squared(alpha, n).value; };
  }
  const double c = o.center.value_or(0.0);
  return [c](int) { return c; };
}

void cmd_analyze(const AnalyzeOptions& o, Run& run) {
  std::istringstream in(read_text(o.in));
  const SweepTable table = read_sweep_csv(in);
  const std::map<int, Curve> curves = sre_curves(table.rows, o.alpha);
  if (curves.empty()) throw std::invalid_argument(fmt::format("analyze: no SRE rows with alpha = {}", o.alpha));
  run.config = Json{{"in", o.in},         {"mode", o.mode},       {"alpha", o.alpha}, {"align", o.align},
                    {"center_tc2", o.center_tc2}, {"beta", o.beta}, {"gamma", o.gamma}, {"window", o.window}};
  if (o.center) run.config["center"] = *o.center;
  if (o.reference) run.config["reference"] = *o.reference;

  std::map<int, Curve> derivatives;
  for (const auto& [n, c] : curves) derivatives.emplace(n, estimate_derivative(c));

  if (o.mode == "crossing") {
    if (curves.size() < 2) throw std::invalid_argument("analyze: crossing needs curves for at least two n");
    AxisMap map = AxisMap::none();
    if (o.align == "shift") map = AxisMap::shift(center_function(o));
    else if (o.align == "scale") map = AxisMap::scale();
    else if (o.align != "none") throw std::invalid_argument("analyze: --align must be none, shift or scale");
    std::optional<std::pair<double, double>> window;
    if (!o.window.empty()) {
      const auto colon = o.window.find(':');
      if (colon == std::string::npos) throw ParseError("analyze: crossing --window must be lo:hi");
      window = std::make_pair(parse_number(trim(o.window.substr(0, colon))),
                              parse_number(trim(o.window.substr(colon + 1))));
    }
    const CrossingReport r = find_crossing(derivatives, map, o.alpha, o.reference, window);
    run.emit(o.out, dump_json(to_json(r)));
  } else if (o.mode == "collapse") {
    CollapseRule rule;
    rule.center = center_function(o);
    rule.abscissa_exponent = o.beta;
    rule.ordinate_exponent = o.gamma;
    std::optional<double> half_width;
    if (!o.window.empty()) half_width = parse_number(o.window);
    const CollapseReport r = collapse_curves(derivatives, rule, o.alpha, half_width);
    run.emit(o.out, dump_json(to_json(r)));
  } else {
    throw std::invalid_argument("analyze: --mode must be crossing or collapse");
  }
}

// ---------------------------------------------------------------------------
// analytic

struct AnalyticOptions {
  std::string formula;
  std::string ns = "8";
  std::string q, nt, t, t2;
  std::string alphas = "2";
  int depth = 0;
  std::string out;
};

void cmd_analytic(const AnalyticOptions& o, Run& run) {
  run.config = Json{{"formula", o.formula}, {"n", o.ns}, {"q", o.q},         {"nt", o.nt},
                    {"t", o.t},             {"t2", o.t2}, {"alphas", o.alphas}, {"depth", o.depth}};
  std::vector<SweepRow> rows;
  auto add = [&](const std::string& model, int n, double param, const std::string& kind, double alpha,
                 double value) { rows.push_back(SweepRow{model, n, param, kind, "sre", alpha, value, 0.0, 0}); };
  const std::vector<double> alphas = parse_grid(o.alphas);
  auto times = [&]() {
    if (!o.t.empty()) return parse_grid(o.t);
    if (o.t2.empty()) throw std::invalid_argument("analytic: this formula needs --t or --t2");
    std::vector<double> ts;
    for (double v : parse_grid(o.t2)) ts.push_back(std::sqrt(std::max(v, 0.0)));
    return ts;
  };
  const std::string& f = o.formula;
  if (f == "m2-clifford-t") {
    for (int n : parse_int_grid(o.ns)) {
      if (!o.nt.empty()) {
        for (int k : parse_int_grid(o.nt)) add("clifford_t", n, k, "n_t", 2.0, m2_clifford_t_exact(n, k));
      } else if (!o.q.empty()) {
        for (double q : parse_grid(o.q)) {
          // The closed form needs an integer T count; q is realized as round(q n).
          const int k = static_cast<int>(std::lround(q * n));
          add("clifford_t", n, static_cast<double>(k), "n_t", 2.0, m2_clifford_t_exact(n, k));
        }
      } else {
        throw std::invalid_argument("analytic: m2-clifford-t needs --nt or --q");
      }
    }
  } else if (f == "m2-clifford-t-asymptotic") {
    if (o.q.empty()) throw std::invalid_argument("analytic: m2-clifford-t-asymptotic needs --q");
    for (int n : parse_int_grid(o.ns))
      for (double q : parse_grid(o.q)) add("clifford_t", n, q, "q", 2.0, m2_clifford_t_asymptotic(n, q).value);
  } else if (f == "sre-linear") {
    if (o.nt.empty()) throw std::invalid_argument("analytic: sre-linear needs --nt");
    for (int n : parse_int_grid(o.ns))
      for (int k : parse_int_grid(o.nt))
        for (double a : alphas) add("clifford_t", n, k, "n_t", a, sre_linear_model(n, k, a));
  } else if (f == "m2-random-basis") {
    for (int n : parse_int_grid(o.ns))
      for (double t : times())
        add("random_basis", n, t, "t", 2.0,
            o.depth > 0 ? m2_random_basis_exact_t(t, o.depth, n) : m2_random_basis_depth_limit(t, n));
  } else if (f == "m2-random-basis-asymptotic") {
    for (int n : parse_int_grid(o.ns))
      for (double t : times()) add("random_basis", n, t, "t", 2.0, m2_random_basis_asymptotic(t, n));
  } else if (f == "gue-approx") {
    for (int n : parse_int_grid(o.ns))
      for (double t : times())
        for (double a : alphas) add("gue", n, t, "t", a, gue_sre_approx(a, n, t));
  } else if (f == "sre-haar") {
    for (int n : parse_int_grid(o.ns))
      for (double a : alphas) add("haar", n, a, "alpha", a, sre_haar(a, n));
  } else if (f == "sre-max") {
    for (int n : parse_int_grid(o.ns))
      for (double a : alphas) {
        const SreMax m = sre_max(a, n);
        add("max_uniform_ansatz", n, a, "alpha", a, m.uniform_ansatz);
        add("max_limit", n, a, "alpha", a, m.limit);
      }
  } else if (f == "per-tgate") {
    for (double a : alphas) add("per_tgate", 1, a, "alpha", a, sre_per_tgate(a));
  } else if (f == "critical-table") {
    for (double a : alphas) add("critical_q", 0, a, "alpha", a, critical_tgate_density(a).value);
    for (int n : parse_int_grid(o.ns))
      for (double a : alphas) add("critical_t2", n, a, "alpha", a, critical_time_squared(a, n).value);
  } else {
    throw std::invalid_argument(
        "analytic: unknown formula '" + f +
        "' (m2-clifford-t, m2-clifford-t-asymptotic, sre-linear, m2-random-basis, m2-random-basis-asymptotic, "
        "gue-approx, sre-haar, sre-max, per-tgate, critical-table)");
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows, {{"formula", f}}, true);
  run.emit(o.out, csv.str());
}

// ---------------------------------------------------------------------------
// oracle

void cmd_oracle(const std::string& measure, const StateOptions& s, const std::string& alphas, int threads,
                const std::string& out, Run& run) {
  run.config = Json{{"measure", measure}, {"state", s.describe()}, {"alphas", alphas}};
  if (s.state_file.empty()) run.seed = s.seed;
  const StateVector psi = s.build();
  Json result;
  if (measure == "dmin") result = to_json(min_relative_entropy(psi, threads));
  else if (measure == "fstab") result = to_json(stabilizer_fidelity(psi, threads));
  else if (measure == "lr") result = to_json(log_free_robustness(psi));
  else if (measure == "nullity") result = to_json(stabilizer_nullity(psi, threads));
  else if (measure == "bounds") {
    result = Json::array();
    for (const auto& b : check_bounds(psi, parse_grid(alphas), threads)) result.push_back(to_json(b));
  } else {
    throw std::invalid_argument("oracle: unknown measure '" + measure + "' (dmin, fstab, lr, nullity, bounds)");
  }
  run.emit(out, dump_json(result));
}

// ---------------------------------------------------------------------------
// spectrum

void cmd_spectrum(const StateOptions& s, int bins, double lower_edge, const std::string& alphas, bool full,
                  int threads, const std::string& out, Run& run) {
  run.config = Json{{"state", s.describe()}, {"bins", bins}, {"lower_edge", lower_edge}, {"alphas", alphas},
                    {"full", full}};
  if (s.state_file.empty()) run.seed = s.seed;
  const StateVector psi = s.build();
  const PauliSpectrum spectrum = pauli_spectrum(psi, threads);
  SpectrumHistogram h = spectrum_histogram(spectrum, bins, true, lower_edge);
  h.model = s.state_file.empty() ? model_name(cli_model(s.model)) : "file";
  h.parameter = s.model == "clifford-t" ? s.nt : s.t;
  h.param_kind = s.model == "clifford-t" ? "n_t" : "t";
  std::ostringstream hs;
  write_histogram_csv(hs, h);
  run.emit(out, hs.str());

  Json summary = Json::array();
  for (double a : parse_grid(alphas)) {
    const SreValue v = sre(spectrum, a);
    summary.push_back(Json{{"alpha", a}, {"value", v.value}, {"n", v.n}});
  }
  if (!out.empty()) run.emit_file(sibling(resolve_output(out), ".sre.json"), dump_json(summary));
  else std::cerr << summary.dump() << "\n";
  if (full) {
    if (out.empty()) throw std::invalid_argument("spectrum: --full needs --out");
    std::ostringstream fs_;
    fs_ << "pauli,beta2\n";
    for (std::size_t i = 0; i < spectrum.values.size(); ++i)
      fs_ << spectrum.string_at(i).to_string() << ',' << format_double(spectrum.values[i]) << '\n';
    run.emit_file(sibling(resolve_output(out), ".full.csv"), fs_.str());
  }
}

// ---------------------------------------------------------------------------
// certify

void cmd_certify(const StateOptions& s, int samples, const std::string& noise, bool proxy, std::uint64_t sample_seed,
                 int threads, const std::string& out, Run& run) {
  run.config = Json{{"state", s.describe()}, {"samples", samples}, {"noise", noise}, {"proxy", proxy},
                    {"sample_seed", sample_seed}};
  run.seed = sample_seed;
  if (samples < 1) throw std::invalid_argument("certify: --samples must be >= 1");
  const StateVector psi = s.build();
  LabState rho = psi;
  if (!noise.empty() && noise != "none") {
    const auto colon = noise.find(':');
    if (colon == std::string::npos || noise.substr(0, colon) != "depolarizing")
      throw std::invalid_argument("certify: --noise must be none or depolarizing:<p>");
    const double p = parse_number(noise.substr(colon + 1));
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("certify: depolarizing parameter must lie in [0, 1]");
    rho = DepolarizedState{psi, p};
  }
  Rng rng(sample_seed);
  const CertificationOutcome o = proxy ? certify_via_closest_stabilizer(psi, rho, samples, rng, threads)
                                       : estimate_fidelity(CertificationPlan(psi, threads), rho, samples, rng);
  Json j = to_json(o);
  j["exact_fidelity"] = exact_fidelity(rho, psi);
  run.emit(out, dump_json(j));
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args);

int report(const std::exception& e, int code) {
  std::cerr << "stabscope: " << e.what() << "\n";
  return code;
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Stabilizer Renyi entropy sweeps, analysis and oracles", "stabscope"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker cap (results do not depend on it)")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", STABSCOPE_VERSION);

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "ensemble SRE sweep over n and a parameter grid");
  sweep->add_option("--model", sw.model, "clifford-t | random-basis | gue");
  sweep->add_option("--n", sw.ns, "qubit counts, e.g. 6,8 or 6:12:2")->required();
  sweep->add_option("--q", sw.q, "T-gate density grid (clifford-t)");
  sweep->add_option("--nt", sw.nt, "T-gate count grid (clifford-t)");
  sweep->add_option("--t", sw.t, "time grid (random-basis, gue)");
  sweep->add_option("--t2", sw.t2, "grid in t^2 (random-basis, gue)");
  sweep->add_option("--alphas", sw.alphas, "Renyi orders");
  sweep->add_option("--instances", sw.instances, "instances per point")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sw.seed, "master seed");
  sweep->add_option("--depth", sw.depth, "random-basis layer count");
  sweep->add_option("--record", sw.record, "extra records: hist, dmin, fidelity")->delimiter(',');
  sweep->add_option("--bins", sw.bins, "histogram bins");
  sweep->add_option("--lower-edge", sw.lower_edge, "lowest histogram edge");
  sweep->add_option("--out", sw.out, "sweep CSV path (stdout when omitted)");

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "crossing or collapse analysis of SRE derivative curves");
  analyze->add_option("--in", an.in, "sweep CSV")->required();
  analyze->add_option("--mode", an.mode, "crossing | collapse");
  analyze->add_option("--alpha", an.alpha, "Renyi order to analyze");
  analyze->add_option("--align", an.align, "crossing alignment: none | shift | scale");
  analyze->add_option("--center", an.center, "fixed center for shift alignment or collapse");
  analyze->add_flag("--center-tc2", an.center_tc2, "center each n at its critical t^2");
  analyze->add_option("--reference", an.reference, "expected crossing, reported alongside");
  analyze->add_option("--window", an.window, "crossing: lo:hi in the aligned variable; collapse: half-width");
  analyze->add_option("--beta", an.beta, "collapse abscissa exponent");
  analyze->add_option("--gamma", an.gamma, "collapse ordinate exponent");
  analyze->add_option("--out", an.out, "report JSON path (stdout when omitted)");

  AnalyticOptions af;
  auto* analytic = app.add_subcommand("analytic", "evaluate closed forms on a grid");
  analytic->add_option("--formula", af.formula, "formula name")->required();
  analytic->add_option("--n", af.ns, "qubit counts");
  analytic->add_option("--q", af.q, "T-gate density grid");
  analytic->add_option("--nt", af.nt, "T-gate count grid");
  analytic->add_option("--t", af.t, "time grid");
  analytic->add_option("--t2", af.t2, "grid in t^2");
  analytic->add_option("--alphas", af.alphas, "Renyi orders");
  analytic->add_option("--depth", af.depth, "random-basis depth (0 = infinite)");
  analytic->add_option("--out", af.out, "CSV path (stdout when omitted)");

  std::string oracle_measure, oracle_alphas = "2,3,4", oracle_out;
  StateOptions oracle_state;
  auto* oracle = app.add_subcommand("oracle", "exhaustive magic monotones on small states");
  oracle->add_option("measure", oracle_measure, "dmin | fstab | lr | nullity | bounds")->required();
  oracle_state.add(oracle);
  oracle->add_option("--alphas", oracle_alphas, "orders for the bounds check");
  oracle->add_option("--out", oracle_out, "result JSON path (stdout when omitted)");

  StateOptions spec_state;
  int spec_bins = 40;
  double spec_lower = 1e-20;
  std::string spec_alphas = "0,0.5,1,2,3,4", spec_out;
  bool spec_full = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Pauli spectrum histogram of one state");
  spec_state.add(spectrum_cmd);
  spectrum_cmd->add_option("--bins", spec_bins, "histogram bins")->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--lower-edge", spec_lower, "lowest histogram edge");
  spectrum_cmd->add_option("--alphas", spec_alphas, "orders for the SRE summary");
  spectrum_cmd->add_flag("--full", spec_full, "also write every beta^2");
  spectrum_cmd->add_option("--out", spec_out, "histogram CSV path (stdout when omitted)");

  StateOptions cert_state;
  int cert_samples = 10000;
  std::string cert_noise = "none", cert_out;
  bool cert_proxy = false;
  std::uint64_t cert_seed = 1;
  auto* certify = app.add_subcommand("certify", "direct fidelity estimation against a prepared state");
  cert_state.add(certify);
  certify->add_option("--samples", cert_samples, "Pauli samples");
  certify->add_option("--noise", cert_noise, "none | depolarizing:<p>");
  certify->add_flag("--proxy", cert_proxy, "estimate via the closest stabilizer state (n <= 5)");
  certify->add_option("--sample-seed", cert_seed, "seed for the Pauli draws");
  certify->add_option("--out", cert_out, "outcome JSON path (stdout when omitted)");

  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  replay->add_option("--manifest", manifest_path, "manifest JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Run run;
  run.argv = args;
  try {
    if (*replay) {
      Json m;
      try {
        m = Json::parse(read_text(manifest_path));
      } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed manifest: ") + e.what());
      }
      if (!m.contains("argv") || !m["argv"].is_array()) throw ParseError("manifest has no argv array");
      const auto recorded = m["argv"].get<std::vector<std::string>>();
      if (!recorded.empty() && recorded.front() == "replay") throw ParseError("manifest records a replay");
      return dispatch(recorded);
    }
    if (*sweep) {
      run.subcommand = "sweep";
      cmd_sweep(sw, threads, run);
    } else if (*analyze) {
      run.subcommand = "analyze";
      cmd_analyze(an, run);
    } else if (*analytic) {
      run.subcommand = "analytic";
      cmd_analytic(af, run);
    } else if (*oracle) {
      run.subcommand = "oracle";
      cmd_oracle(oracle_measure, oracle_state, oracle_alphas, threads, oracle_out, run);
    } else if (*spectrum_cmd) {
      run.subcommand = "spectrum";
      cmd_spectrum(spec_state, spec_bins, spec_lower, spec_alphas, spec_full, threads, spec_out, run);
    } else if (*certify) {
      run.subcommand = "certify";
      cmd_certify(cert_state, cert_samples, cert_noise, cert_proxy, cert_seed, threads, cert_out, run);
    }
    run.config["threads"] = threads;
    run.finish();
  } catch (const GuardError& e) {
    return report(e, kExitGuard);
  } catch (const NumericalError& e) {
    return report(e, kExitNumerical);
  } catch (const std::invalid_argument& e) {
    return report(e, kExitUsage);
  } catch (const std::exception& e) {
    return report(e, 1);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args);
}
