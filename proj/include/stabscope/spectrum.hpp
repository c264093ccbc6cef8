#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stabscope/pauli.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

constexpr int kSpectrumMaxQubits = 14;

// Values indexed by (x_mask << n) | z_mask for the Hermitian Pauli strings.
struct PauliExpectations {
  int n = 0;
  std::vector<double> values;  // beta_sigma, signed

  static std::size_t index(int n, std::uint64_t x, std::uint64_t z) { return (std::size_t(x) << n) | z; }
  double at(const PauliString& p) const;
};

struct PauliSpectrum {
  int n = 0;
  std::vector<double> values;  // beta_sigma^2

  double at(const PauliString& p) const;
  PauliString string_at(std::size_t index) const;
};

// Fast transform: one Walsh–Hadamard pass over z for each x-mask, O(n 4^n).
// Workers split the x-masks; results do not depend on the thread count.
PauliExpectations pauli_expectations(const StateVector& psi, int threads = 1);
PauliSpectrum pauli_spectrum(const StateVector& psi, int threads = 1);
PauliSpectrum squared(const PauliExpectations& e);

// Log-spaced bins over [lower_edge, 1]; values below lower_edge go to an
// underflow bin; the top bin includes 1.
struct SpectrumHistogram {
  std::string model;
  int n = 0;
  double parameter = 0.0;
  std::string param_kind;
  int instances = 0;
  bool exclude_identity = true;
  std::vector<double> edges;        // bins + 1 ascending edges
  double underflow = 0.0;           // probability below edges.front()
  std::vector<double> probability;  // per bin

  int bins() const { return static_cast<int>(probability.size()); }
};

// Averages bin counts over instances; every instance must have the same n.
class HistogramAccumulator {
 public:
  HistogramAccumulator(int bins, double lower_edge = 1e-20, bool exclude_identity = true);
  void add(const PauliSpectrum& spectrum);
  // Integer counts, so merge order does not affect the result.
  void merge(const HistogramAccumulator& other);
  SpectrumHistogram result() const;
  int instances() const { return instances_; }

 private:
  int bins_;
  double lower_edge_;
  bool exclude_identity_;
  int n_ = -1;
  int instances_ = 0;
  std::uint64_t underflow_ = 0;
  std::vector<std::uint64_t> counts_;
};

SpectrumHistogram spectrum_histogram(const PauliSpectrum& spectrum, int bins, bool exclude_identity = true,
                                     double lower_edge = 1e-20);

// Half the L1 distance between the bin probabilities, underflow bin included.
double total_variation(const SpectrumHistogram& a, const SpectrumHistogram& b);

struct TwoPeakSummary {
  double in_group_mean = 0.0;   // over non-identity members of the group
  double out_group_mean = 0.0;  // over strings outside the group
  double gap = 0.0;             // min over in-group minus max over out-group
  std::size_t in_group_size = 0;
  std::size_t out_group_size = 0;
};

// The group is the set of (unsigned) strings of a stabilizer group, identity included.
TwoPeakSummary two_peak_summary(const PauliSpectrum& spectrum, std::span<const PauliString> group);

void write_histogram_csv(std::ostream& out, const SpectrumHistogram& h);
SpectrumHistogram read_histogram_csv(std::istream& in);

}  // namespace stabscope
