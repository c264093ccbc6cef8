#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles/dense.hpp"
#include "stabscope/error.hpp"
#include "stabscope/spectrum.hpp"
#include "stabscope/tableau.hpp"

using namespace stabscope;

namespace {

StateVector t_state() {
  StateVector s = StateVector::zero(1);
  s.apply_h(0);
  s.apply_t(0);
  return s;
}

}  // namespace

TEST(Spectrum, FastTransformMatchesNaive) {
  Rng rng(1);
  for (int n = 1; n <= 5; ++n) {
    const StateVector psi = haar_random_state(n, rng);
    const PauliExpectations fast = pauli_expectations(psi);
    const std::vector<double> naive = oracle::naive_expectations(psi);
    ASSERT_EQ(fast.values.size(), naive.size());
    for (std::size_t i = 0; i < naive.size(); ++i) EXPECT_NEAR(fast.values[i], naive[i], 1e-10);
  }
}

TEST(Spectrum, IndependentOfThreadCount) {
  Rng rng(2);
  const StateVector psi = haar_random_state(7, rng);
  EXPECT_EQ(pauli_expectations(psi, 1).values, pauli_expectations(psi, 4).values);
}

TEST(Spectrum, PureStateSumRule) {
  Rng rng(3);
  const PauliSpectrum s = pauli_spectrum(haar_random_state(6, rng));
  double total = 0.0;
  for (double v : s.values) total += v;
  EXPECT_NEAR(total, 64.0, 1e-9);
  EXPECT_NEAR(s.values[0], 1.0, 1e-12);
}

TEST(Spectrum, TStateValues) {
  const PauliSpectrum s = pauli_spectrum(t_state());
  EXPECT_NEAR(s.at(pauli_parse("I")), 1.0, 1e-14);
  EXPECT_NEAR(s.at(pauli_parse("X")), 0.5, 1e-14);
  EXPECT_NEAR(s.at(pauli_parse("Y")), 0.5, 1e-14);
  EXPECT_NEAR(s.at(pauli_parse("Z")), 0.0, 1e-14);
  const PauliExpectations e = pauli_expectations(t_state());
  EXPECT_NEAR(e.at(pauli_parse("X")), std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(e.at(pauli_parse("Y")), -std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(e.at(pauli_parse("Y").negated()), std::sqrt(0.5), 1e-14);
}

TEST(Spectrum, StringAtInvertsIndex) {
  PauliSpectrum s{3, std::vector<double>(64, 0.0)};
  for (std::size_t i = 0; i < 64; ++i) {
    const PauliString p = s.string_at(i);
    EXPECT_EQ(PauliExpectations::index(3, p.x(), p.z()), i);
    EXPECT_TRUE(p.is_hermitian());
  }
}

TEST(Spectrum, GuardsLargeStates) {
  EXPECT_THROW(pauli_expectations(StateVector::zero(15)), GuardError);
}

TEST(Histogram, CountsNonIdentityStrings) {
  const SpectrumHistogram h = spectrum_histogram(pauli_spectrum(t_state()), 10);
  double total = h.underflow;
  for (double p : h.probability) total += p;
  EXPECT_NEAR(total, 1.0, 1e-14);
  EXPECT_NEAR(h.underflow, 1.0 / 3.0, 1e-14);
  EXPECT_EQ(h.edges.size(), 11u);
  EXPECT_DOUBLE_EQ(h.edges.back(), 1.0);
  EXPECT_DOUBLE_EQ(h.edges.front(), 1e-20);
}

TEST(Histogram, AccumulatorMergeMatchesSequentialAdds) {
  Rng rng(4);
  std::vector<PauliSpectrum> spectra;
  for (int i = 0; i < 4; ++i) spectra.push_back(pauli_spectrum(haar_random_state(4, rng)));
  HistogramAccumulator all(20), left(20), right(20);
  for (int i = 0; i < 4; ++i) {
    all.add(spectra[i]);
    (i < 2 ? left : right).add(spectra[i]);
  }
  left.merge(right);
  EXPECT_EQ(left.result().probability, all.result().probability);
  EXPECT_EQ(left.instances(), 4);
  EXPECT_NEAR(total_variation(left.result(), all.result()), 0.0, 1e-15);
}

TEST(Histogram, TotalVariationCountsUnderflow) {
  const SpectrumHistogram a = spectrum_histogram(pauli_spectrum(t_state()), 10);
  const SpectrumHistogram b = spectrum_histogram(pauli_spectrum(StateVector::zero(1)), 10);
  // Bins span two decades, so 0.5 and 1 share the top bin: T state puts 2/3 there
  // and 1/3 in underflow, |0> the reverse.
  EXPECT_NEAR(total_variation(a, b), 1.0 / 3.0, 1e-14);
}

TEST(Histogram, CsvRoundTrip) {
  Rng rng(5);
  SpectrumHistogram h = spectrum_histogram(pauli_spectrum(haar_random_state(3, rng)), 12);
  h.model = "gue";
  h.parameter = 0.25;
  h.param_kind = "t";
  h.instances = 1;
  std::stringstream ss;
  write_histogram_csv(ss, h);
  const SpectrumHistogram back = read_histogram_csv(ss);
  EXPECT_EQ(back.model, h.model);
  EXPECT_EQ(back.n, h.n);
  EXPECT_EQ(back.parameter, h.parameter);
  EXPECT_EQ(back.edges, h.edges);
  EXPECT_EQ(back.probability, h.probability);
  EXPECT_EQ(back.underflow, h.underflow);
}

TEST(TwoPeak, StabilizerStateSeparatesGroup) {
  Rng rng(6);
  const Tableau t = apply_clifford(tableau_new(3), sample_random_clifford(3, rng));
  const auto group = stabilizer_group(t);
  const TwoPeakSummary s = two_peak_summary(pauli_spectrum(tableau_to_statevector(t)), group);
  EXPECT_EQ(s.in_group_size, 7u);
  EXPECT_EQ(s.out_group_size, 56u);
  EXPECT_NEAR(s.in_group_mean, 1.0, 1e-12);
  EXPECT_NEAR(s.out_group_mean, 0.0, 1e-12);
  EXPECT_NEAR(s.gap, 1.0, 1e-12);
}
