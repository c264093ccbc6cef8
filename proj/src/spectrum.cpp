#include "stabscope/spectrum.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "stabscope/error.hpp"
#include "stabscope/parallel.hpp"

namespace stabscope {

double PauliExpectations::at(const PauliString& p) const {
  require(p.n() == n, "PauliExpectations: qubit count mismatch");
  return p.sign() * values[index(n, p.x(), p.z())];
}

double PauliSpectrum::at(const PauliString& p) const {
  require(p.n() == n, "PauliSpectrum: qubit count mismatch");
  return values[PauliExpectations::index(n, p.x(), p.z())];
}

PauliString PauliSpectrum::string_at(std::size_t index) const {
  const std::uint64_t z = index & qubit_mask(n);
  return PauliString::hermitian(n, index >> n, z);
}

namespace {

void walsh_hadamard(std::span<Complex> a) {
  for (std::size_t h = 1; h < a.size(); h <<= 1)
    for (std::size_t i = 0; i < a.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex u = a[j], v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
}

// Writes beta_{a,z} for all z into out (length 2^n).
template <class Sink>
void expectations_for_x(const StateVector& psi, std::uint64_t a, std::vector<Complex>& g, Sink&& sink) {
  const std::size_t d = psi.dim();
  for (std::size_t y = 0; y < d; ++y) g[y] = std::conj(psi[y ^ a]) * psi[y];
  walsh_hadamard(g);
  static const Complex kI[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  for (std::size_t z = 0; z < d; ++z) {
    const Complex beta = kI[std::popcount(a & z) & 3] * g[z];
    if (std::abs(beta.imag()) > 1e-9)
      throw NumericalError("pauli spectrum: non-real expectation value");
    sink(z, beta.real());
  }
}

template <class Transform>
std::vector<double> compute(const StateVector& psi, int threads, Transform&& transform) {
  const int n = psi.n();
  guard(n <= kSpectrumMaxQubits, "pauli spectrum: n exceeds the dense 4^n limit");
  const std::size_t d = psi.dim();
  std::vector<double> values(d * d);
  parallel_for(d, threads, [&](std::size_t begin, std::size_t end, int) {
    std::vector<Complex> g(d);
    for (std::size_t a = begin; a < end; ++a) {
      double* row = &values[a << n];
      expectations_for_x(psi, a, g, [&](std::size_t z, double beta) { row[z] = transform(beta); });
    }
  });
  return values;
}

}  // namespace

PauliExpectations pauli_expectations(const StateVector& psi, int threads) {
  return PauliExpectations{psi.n(), compute(psi, threads, [](double b) { return b; })};
}

PauliSpectrum pauli_spectrum(const StateVector& psi, int threads) {
  return PauliSpectrum{psi.n(), compute(psi, threads, [](double b) { return b * b; })};
}

PauliSpectrum squared(const PauliExpectations& e) {
  PauliSpectrum s{e.n, e.values};
  for (auto& v : s.values) v *= v;
  return s;
}

HistogramAccumulator::HistogramAccumulator(int bins, double lower_edge, bool exclude_identity)
    : bins_(bins), lower_edge_(lower_edge), exclude_identity_(exclude_identity), counts_(bins, 0) {
  require(bins >= 1, "HistogramAccumulator: need at least one bin");
  require(lower_edge > 0.0 && lower_edge < 1.0, "HistogramAccumulator: lower edge must lie in (0, 1)");
}

void HistogramAccumulator::add(const PauliSpectrum& spectrum) {
  if (n_ < 0) n_ = spectrum.n;
  require(spectrum.n == n_, "HistogramAccumulator: qubit count changed between instances");
  const double log_lo = std::log10(lower_edge_);
  const double width = -log_lo / bins_;
  for (std::size_t i = exclude_identity_ ? 1 : 0; i < spectrum.values.size(); ++i) {
    const double v = spectrum.values[i];
    if (v < lower_edge_) {
      ++underflow_;
      continue;
    }
    int bin = static_cast<int>((std::log10(v) - log_lo) / width);
    if (bin >= bins_) bin = bins_ - 1;
    if (bin < 0) bin = 0;
    ++counts_[bin];
  }
  ++instances_;
}

void HistogramAccumulator::merge(const HistogramAccumulator& other) {
  require(other.bins_ == bins_ && other.lower_edge_ == lower_edge_ && other.exclude_identity_ == exclude_identity_,
          "HistogramAccumulator: incompatible binning");
  if (other.instances_ == 0) return;
  if (n_ < 0) n_ = other.n_;
  require(other.n_ == n_, "HistogramAccumulator: qubit count mismatch");
  underflow_ += other.underflow_;
  for (int b = 0; b < bins_; ++b) counts_[b] += other.counts_[b];
  instances_ += other.instances_;
}

SpectrumHistogram HistogramAccumulator::result() const {
  SpectrumHistogram h;
  h.n = n_;
  h.instances = instances_;
  h.exclude_identity = exclude_identity_;
  const double log_lo = std::log10(lower_edge_);
  for (int b = 0; b <= bins_; ++b) h.edges.push_back(b == bins_ ? 1.0 : std::pow(10.0, log_lo * (1.0 - double(b) / bins_)));
  h.edges.front() = lower_edge_;
  std::uint64_t total = underflow_;
  for (auto c : counts_) total += c;
  const double denom = total == 0 ? 1.0 : static_cast<double>(total);
  h.underflow = underflow_ / denom;
  for (auto c : counts_) h.probability.push_back(c / denom);
  return h;
}

SpectrumHistogram spectrum_histogram(const PauliSpectrum& spectrum, int bins, bool exclude_identity,
                                     double lower_edge) {
  HistogramAccumulator acc(bins, lower_edge, exclude_identity);
  acc.add(spectrum);
  return acc.result();
}

double total_variation(const SpectrumHistogram& a, const SpectrumHistogram& b) {
  require(a.bins() == b.bins(), "total_variation: bin counts differ");
  for (int i = 0; i <= a.bins(); ++i)
    require(std::abs(a.edges[i] - b.edges[i]) <= 1e-12 * std::abs(a.edges[i]), "total_variation: bin edges differ");
  double s = std::abs(a.underflow - b.underflow);
  for (int i = 0; i < a.bins(); ++i) s += std::abs(a.probability[i] - b.probability[i]);
  return 0.5 * s;
}

TwoPeakSummary two_peak_summary(const PauliSpectrum& spectrum, std::span<const PauliString> group) {
  const std::size_t total = spectrum.values.size();
  std::vector<char> member(total, 0);
  for (const auto& p : group) {
    require(p.n() == spectrum.n, "two_peak_summary: qubit count mismatch");
    member[PauliExpectations::index(spectrum.n, p.x(), p.z())] = 1;
  }
  TwoPeakSummary s;
  double in_sum = 0.0, out_sum = 0.0;
  double in_min = 2.0, out_max = -1.0;
  for (std::size_t i = 1; i < total; ++i) {
    const double v = spectrum.values[i];
    if (member[i]) {
      in_sum += v;
      in_min = std::min(in_min, v);
      ++s.in_group_size;
    } else {
      out_sum += v;
      out_max = std::max(out_max, v);
      ++s.out_group_size;
    }
  }
  s.in_group_mean = s.in_group_size ? in_sum / s.in_group_size : 0.0;
  s.out_group_mean = s.out_group_size ? out_sum / s.out_group_size : 0.0;
  s.gap = in_min - out_max;
  return s;
}

void write_histogram_csv(std::ostream& out, const SpectrumHistogram& h) {
  out << "# stabscope histogram v1\n";
  out << "# model=" << h.model << "\n";
  out << "# n=" << h.n << "\n";
  out << "# param_kind=" << h.param_kind << "\n";
  out << fmt::format("# param={:.17g}\n", h.parameter);
  out << "# instances=" << h.instances << "\n";
  out << "# exclude_identity=" << (h.exclude_identity ? 1 : 0) << "\n";
  out << "bin_lo,bin_hi,probability\n";
  out << fmt::format("{:.17g},{:.17g},{:.17g}\n", 0.0, h.edges.front(), h.underflow);
  for (int b = 0; b < h.bins(); ++b)
    out << fmt::format("{:.17g},{:.17g},{:.17g}\n", h.edges[b], h.edges[b + 1], h.probability[b]);
}

SpectrumHistogram read_histogram_csv(std::istream& in) {
  SpectrumHistogram h;
  std::string line;
  bool header_seen = false, first_row = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2), value = line.substr(eq + 1);
      if (key == "model") h.model = value;
      else if (key == "n") h.n = std::stoi(value);
      else if (key == "param_kind") h.param_kind = value;
      else if (key == "param") h.parameter = std::stod(value);
      else if (key == "instances") h.instances = std::stoi(value);
      else if (key == "exclude_identity") h.exclude_identity = value == "1";
      continue;
    }
    if (!header_seen) {
      if (line != "bin_lo,bin_hi,probability") throw ParseError("histogram csv: unexpected header");
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string lo, hi, p;
    if (!std::getline(row, lo, ',') || !std::getline(row, hi, ',') || !std::getline(row, p))
      throw ParseError("histogram csv: malformed row");
    if (first_row) {
      h.underflow = std::stod(p);
      h.edges.push_back(std::stod(hi));
      first_row = false;
    } else {
      h.probability.push_back(std::stod(p));
      h.edges.push_back(std::stod(hi));
    }
  }
  if (!header_seen || first_row) throw ParseError("histogram csv: no data");
  return h;
}

}  // namespace stabscope
