#include "stabscope/io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "stabscope/error.hpp"

namespace stabscope {

namespace {

constexpr const char* kSweepColumns = "model,n,param,param_kind,alpha,mean,stderr,instances";
constexpr const char* kMeasureColumns = "model,n,param,param_kind,measure,alpha,mean,stderr,instances";

void write_preamble(std::ostream& out, const char* title, const std::map<std::string, std::string>& metadata) {
  out << "# stabscope " << title << " v1\n";
  for (const auto& [k, v] : metadata) out << "# " << k << "=" << v << "\n";
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream s(line);
  std::string field;
  while (std::getline(s, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// NaN and infinities round-trip through JSON as strings.
Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParseError("expected a number, got '" + s + "'");
  }
  return j.get<double>();
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     const std::map<std::string, std::string>& metadata, bool complete) {
  write_preamble(out, "sweep", metadata);
  out << kSweepColumns << "\n";
  for (const auto& r : rows) {
    if (r.measure != "sre") continue;
    out << r.model << ',' << r.n << ',' << format_double(r.param) << ',' << r.param_kind << ','
        << format_double(r.alpha) << ',' << format_double(r.mean) << ',' << format_double(r.std_error) << ','
        << r.instances << '\n';
  }
  if (complete) out << "# complete\n";
}

void write_measures_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                        const std::map<std::string, std::string>& metadata, bool complete) {
  write_preamble(out, "measures", metadata);
  out << kMeasureColumns << "\n";
  for (const auto& r : rows) {
    if (r.measure == "sre") continue;
    out << r.model << ',' << r.n << ',' << format_double(r.param) << ',' << r.param_kind << ',' << r.measure << ','
        << format_double(r.alpha) << ',' << format_double(r.mean) << ',' << format_double(r.std_error) << ',' << r.instances << '\n';
  }
  if (complete) out << "# complete\n";
}

SweepTable read_sweep_csv(std::istream& in) {
  SweepTable table;
  std::string line;
  bool magic = false, header = false, measures = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == "# stabscope sweep v1") {
        magic = true;
      } else if (line == "# stabscope measures v1") {
        magic = measures = true;
      } else if (line == "# complete") {
        table.complete = true;
      } else if (const auto eq = line.find('='); eq != std::string::npos && line.size() > 2) {
        table.metadata[line.substr(2, eq - 2)] = line.substr(eq + 1);
      }
      continue;
    }
    if (!magic) throw ParseError("sweep csv: missing '# stabscope sweep v1' header");
    if (!header) {
      if (line != (measures ? kMeasureColumns : kSweepColumns)) throw ParseError("sweep csv: unexpected columns");
      header = true;
      continue;
    }
    const auto f = split(line);
    const std::size_t fields = measures ? 9 : 8;
    if (f.size() != fields) throw ParseError(fmt::format("sweep csv: expected {} fields in '{}'", fields, line));
    // Measure rows carry one extra leading column (the measure tag) before alpha.
    const std::size_t o = measures ? 1 : 0;
    try {
      SweepRow r;
      r.model = f[0];
      r.n = std::stoi(f[1]);
      r.param = std::stod(f[2]);
      r.param_kind = f[3];
      if (measures) r.measure = f[4];
      r.alpha = std::stod(f[4 + o]);
      r.mean = std::stod(f[5 + o]);
      r.std_error = std::stod(f[6 + o]);
      r.instances = std::stoi(f[7 + o]);
      table.rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError("sweep csv: malformed row '" + line + "'");
    }
  }
  if (!header) throw ParseError("sweep csv: no column header");
  return table;
}

std::map<std::string, std::string> sweep_metadata(const SweepConfig& c) {
  std::map<std::string, std::string> m;
  m["model"] = model_name(c.model);
  m["seed"] = std::to_string(c.seed);
  m["instances"] = std::to_string(c.instances);
  if (c.model == Model::random_basis) m["depth"] = std::to_string(c.depth);
  std::string ns;
  for (int n : c.ns) ns += (ns.empty() ? "" : ";") + std::to_string(n);
  m["n"] = ns;
  std::string alphas;
  for (double a : c.alphas) alphas += (alphas.empty() ? "" : ";") + format_double(a);
  m["alphas"] = alphas;
  m["param_kind"] = param_kind(c);
  return m;
}

Json to_json(const StateVector& s) {
  Json amps = Json::array();
  for (const auto& a : s.amplitudes()) amps.push_back({a.real(), a.imag()});
  return Json{{"n", s.n()}, {"amplitudes", amps}};
}

StateVector state_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    require(n >= 0 && n <= StateVector::kMaxQubits, "state json: n out of range");
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n))
      throw ParseError("state json: amplitude count is not 2^n");
    std::vector<Complex> v;
    v.reserve(amps.size());
    for (const auto& a : amps) {
      if (!a.is_array() || a.size() != 2) throw ParseError("state json: amplitude must be [re, im]");
      v.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return StateVector(n, std::move(v));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("state json: ") + e.what());
  }
}

Json to_json(const CliffordCircuit& c) {
  Json out = Json::array();
  for (const Gate& g : c.gates()) {
    Json q = Json::array({g.control});
    if (g.kind == GateKind::CNOT) q.push_back(g.target);
    out.push_back({{"gate", gate_name(g.kind)}, {"q", q}});
  }
  return out;
}

CliffordCircuit circuit_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("circuit json: expected an array");
  CliffordCircuit c(n);
  try {
    for (const auto& g : j) {
      const GateKind kind = parse_gate_name(g.at("gate").get<std::string>());
      const auto& q = g.at("q");
      const std::size_t arity = kind == GateKind::CNOT ? 2 : 1;
      if (!q.is_array() || q.size() != arity) throw ParseError("circuit json: wrong qubit count for gate");
      if (kind == GateKind::CNOT) c.cnot(q[0].get<int>(), q[1].get<int>());
      else c.append(Gate{kind, q[0].get<int>()});
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("circuit json: ") + e.what());
  }
  return c;
}

Json to_json(const StabilizerStateDescriptor& d) {
  return Json{{"n", d.n}, {"k", d.k}, {"basis", d.basis}, {"shift", d.shift}, {"linear", d.linear},
              {"quadratic", d.quadratic}};
}

StabilizerStateDescriptor descriptor_from_json(const Json& j) {
  StabilizerStateDescriptor d;
  d.n = j.at("n").get<int>();
  d.k = j.at("k").get<int>();
  d.basis = j.at("basis").get<std::vector<std::uint64_t>>();
  d.shift = j.at("shift").get<std::uint64_t>();
  d.linear = j.at("linear").get<std::uint64_t>();
  d.quadratic = j.at("quadratic").get<std::vector<std::uint64_t>>();
  require(static_cast<int>(d.basis.size()) == d.k && static_cast<int>(d.quadratic.size()) == d.k,
          "descriptor json: inconsistent k");
  return d;
}

Json to_json(const OracleResult& r) {
  Json j{{"measure", r.measure}, {"n", r.n}, {"value", number(r.value)}, {"certified", r.certified},
         {"states_visited", r.states_visited}};
  j["closest"] = r.closest ? to_json(*r.closest) : Json(nullptr);
  Json dec = Json::array();
  for (const auto& [d, x] : r.decomposition) dec.push_back({{"state", to_json(d)}, {"coefficient", x}});
  j["decomposition"] = dec;
  return j;
}

OracleResult oracle_result_from_json(const Json& j) {
  OracleResult r;
  r.measure = j.at("measure").get<std::string>();
  r.n = j.at("n").get<int>();
  r.value = number_from(j.at("value"));
  r.certified = j.at("certified").get<bool>();
  r.states_visited = j.at("states_visited").get<std::uint64_t>();
  if (!j.at("closest").is_null()) r.closest = descriptor_from_json(j.at("closest"));
  for (const auto& e : j.at("decomposition"))
    r.decomposition.emplace_back(descriptor_from_json(e.at("state")), e.at("coefficient").get<double>());
  return r;
}

Json to_json(const BoundCheck& b) {
  return Json{{"name", b.name},           {"alpha", b.alpha},         {"lhs", number(b.lhs)},
              {"rhs", number(b.rhs)},     {"satisfied", b.satisfied}, {"slack", number(b.slack)}};
}

BoundCheck bound_check_from_json(const Json& j) {
  return BoundCheck{j.at("name").get<std::string>(), j.at("alpha").get<double>(), number_from(j.at("lhs")),
                    number_from(j.at("rhs")),        j.at("satisfied").get<bool>(), number_from(j.at("slack"))};
}

Json to_json(const CrossingReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json cands = Json::array();
    for (double c : p.candidates) cands.push_back(c);
    pairs.push_back({{"n_a", p.n_a}, {"n_b", p.n_b}, {"degenerate", p.degenerate}, {"x", number(p.x)},
                     {"candidates", cands}});
  }
  Json j{{"alpha", r.alpha}, {"alignment", r.alignment}, {"pairs", pairs},
         {"pooled", number(r.pooled)}, {"spread", number(r.spread)}};
  j["reference"] = r.reference ? Json(*r.reference) : Json(nullptr);
  j["window"] = r.window ? Json::array({r.window->first, r.window->second}) : Json(nullptr);
  return j;
}

CrossingReport crossing_report_from_json(const Json& j) {
  CrossingReport r;
  r.alpha = j.at("alpha").get<double>();
  r.alignment = j.at("alignment").get<std::string>();
  for (const auto& p : j.at("pairs")) {
    PairCrossing pc;
    pc.n_a = p.at("n_a").get<int>();
    pc.n_b = p.at("n_b").get<int>();
    pc.degenerate = p.at("degenerate").get<bool>();
    pc.x = number_from(p.at("x"));
    pc.candidates = p.at("candidates").get<std::vector<double>>();
    r.pairs.push_back(pc);
  }
  r.pooled = number_from(j.at("pooled"));
  r.spread = number_from(j.at("spread"));
  if (!j.at("reference").is_null()) r.reference = j.at("reference").get<double>();
  if (!j.at("window").is_null()) r.window = std::make_pair(j.at("window")[0].get<double>(), j.at("window")[1].get<double>());
  return r;
}

Json to_json(const CollapseReport& r) {
  Json curves = Json::object();
  for (const auto& [n, c] : r.transformed) curves[std::to_string(n)] = {{"x", c.x}, {"y", c.y}};
  return Json{{"alpha", r.alpha},       {"abscissa_exponent", r.abscissa_exponent},
              {"ordinate_exponent", r.ordinate_exponent}, {"window", r.window},
              {"residual", number(r.residual)}, {"transformed", curves}};
}

CollapseReport collapse_report_from_json(const Json& j) {
  CollapseReport r;
  r.alpha = j.at("alpha").get<double>();
  r.abscissa_exponent = j.at("abscissa_exponent").get<double>();
  r.ordinate_exponent = j.at("ordinate_exponent").get<double>();
  r.window = j.at("window").get<double>();
  r.residual = number_from(j.at("residual"));
  for (const auto& [key, c] : j.at("transformed").items())
    r.transformed.emplace(std::stoi(key), Curve{c.at("x").get<std::vector<double>>(), c.at("y").get<std::vector<double>>()});
  return r;
}

Json to_json(const CertificationOutcome& o) {
  Json j{{"estimate", number(o.estimate)},         {"stderr", number(o.std_error)},
         {"samples", o.samples},                   {"via_proxy", o.via_proxy},
         {"proxy_bound", number(o.proxy_bound)},   {"target_m2", number(o.target_m2)},
         {"nontrivial_regime", o.nontrivial_regime}, {"proxy_fidelity", number(o.proxy_fidelity)}};
  j["proxy"] = o.proxy ? to_json(*o.proxy) : Json(nullptr);
  return j;
}

CertificationOutcome certification_outcome_from_json(const Json& j) {
  CertificationOutcome o;
  o.estimate = number_from(j.at("estimate"));
  o.std_error = number_from(j.at("stderr"));
  o.samples = j.at("samples").get<int>();
  o.via_proxy = j.at("via_proxy").get<bool>();
  o.proxy_bound = number_from(j.at("proxy_bound"));
  o.target_m2 = number_from(j.at("target_m2"));
  o.nontrivial_regime = j.at("nontrivial_regime").get<bool>();
  o.proxy_fidelity = number_from(j.at("proxy_fidelity"));
  if (!j.at("proxy").is_null()) o.proxy = descriptor_from_json(j.at("proxy"));
  return o;
}

Json to_json(const SpectrumHistogram& h) {
  return Json{{"model", h.model},         {"n", h.n},           {"param", h.parameter},
              {"param_kind", h.param_kind}, {"instances", h.instances}, {"exclude_identity", h.exclude_identity},
              {"edges", h.edges},         {"underflow", h.underflow}, {"probability", h.probability}};
}

Json to_json(const ModelComparison& c) {
  Json gue = Json::array(), rb = Json::array();
  for (const auto& h : c.gue) gue.push_back(to_json(h));
  for (const auto& h : c.random_basis) rb.push_back(to_json(h));
  return Json{{"n", c.n},           {"depth", c.depth},         {"instances", c.instances},
              {"times", c.times},   {"total_variation", c.total_variation},
              {"gue", gue},         {"random_basis", rb}};
}

}  // namespace stabscope
