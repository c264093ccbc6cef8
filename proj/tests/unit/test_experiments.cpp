#include <gtest/gtest.h>

#include <cmath>

#include "stabscope/error.hpp"
#include "stabscope/experiments.hpp"
#include "stabscope/sre.hpp"

using namespace stabscope;

namespace {

const SweepRow* find_row(const SweepResult& r, int n, double param, const std::string& measure, double alpha = 2.0) {
  for (const auto& row : r.rows)
    if (row.n == n && std::abs(row.param - param) < 1e-12 && row.measure == measure &&
        (measure.rfind("sre", 0) != 0 || row.alpha == alpha))
      return &row;
  return nullptr;
}

}  // namespace

TEST(MeanStderr, KnownSample) {
  const std::vector<double> v{1, 2, 3, 4};
  const MeanStderr m = mean_and_stderr(v);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
  const std::vector<double> one{7};
  EXPECT_EQ(mean_and_stderr(one).std_error, 0.0);
}

TEST(Sweep, CliffordTIsDeterministicAndThreadIndependent) {
  SweepConfig c;
  c.model = Model::clifford_t;
  c.ns = {3, 4};
  c.t_counts = {0, 2, 5};
  c.instances = 6;
  c.alphas = {2.0, 1.0};
  c.seed = 17;
  const SweepResult a = run_sweep(c);
  c.threads = 3;
  const SweepResult b = run_sweep(c);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].mean, b.rows[i].mean);
  EXPECT_TRUE(a.complete);
  EXPECT_NEAR(find_row(a, 3, 0, "sre")->mean, 0.0, 1e-10);
  EXPECT_EQ(param_kind(c), "n_t");
  EXPECT_NEAR(find_row(a, 4, 5, "q_realized")->mean, 1.25, 1e-15);
}

TEST(Sweep, CliffordTDensityGridRounds) {
  SweepConfig c;
  c.ns = {4};
  c.params = {0.5, 1.0};
  c.instances = 2;
  const SweepResult r = run_sweep(c);
  EXPECT_EQ(param_kind(c), "q");
  EXPECT_NEAR(find_row(r, 4, 0.5, "q_realized")->mean, 0.5, 1e-15);
}

TEST(Sweep, CliffordTMeanTracksExactFormula) {
  SweepConfig c;
  c.ns = {4};
  c.t_counts = {3};
  c.instances = 200;
  c.threads = 2;
  const SweepResult r = run_sweep(c);
  const SweepRow* row = find_row(r, 4, 3, "sre_annealed");
  ASSERT_NE(row, nullptr);
  EXPECT_NEAR(row->mean, m2_clifford_t_exact(4, 3), 4.0 * row->std_error);
  // The plain mean of M2 sits above the annealed value (Jensen).
  EXPECT_GE(find_row(r, 4, 3, "sre")->mean, row->mean);
}

TEST(Annealed, MatchesHandComputation) {
  const std::vector<double> m{std::log(4.0 / 3.0), 0.0};
  const MeanStderr a = annealed(m, 2.0);
  EXPECT_NEAR(a.mean, -std::log((0.75 + 1.0) / 2.0), 1e-15);
  const std::vector<double> same{0.3, 0.3, 0.3};
  EXPECT_NEAR(annealed(same, 3.0).mean, 0.3, 1e-15);
  EXPECT_EQ(annealed(same, 3.0).std_error, 0.0);
  EXPECT_THROW(annealed(same, 1.0), std::invalid_argument);
}

TEST(Sweep, GueRecordsFidelityAndDmin) {
  SweepConfig c;
  c.model = Model::gue;
  c.ns = {3};
  c.params = {0.0, 0.1};
  c.instances = 4;
  c.record_fidelity = true;
  c.record_dmin = true;
  c.record_histogram = true;
  c.histogram_bins = 10;
  const SweepResult r = run_sweep(c);
  EXPECT_NEAR(find_row(r, 3, 0.0, "fidelity")->mean, 1.0, 1e-12);
  EXPECT_NEAR(find_row(r, 3, 0.0, "dmin")->mean, 0.0, 1e-12);
  EXPECT_LT(find_row(r, 3, 0.1, "fidelity")->mean, 1.0);
  EXPECT_EQ(r.histograms.size(), 2u);
  EXPECT_EQ(r.histograms[0].instances, 4);
}

TEST(Sweep, RandomBasisValidatesDepth) {
  SweepConfig c;
  c.model = Model::random_basis;
  c.ns = {4};
  c.params = {0.1};
  c.depth = 100;
  EXPECT_THROW(run_sweep(c), std::invalid_argument);
  c.depth = 200;
  c.instances = 2;
  EXPECT_NO_THROW(run_sweep(c));
}

TEST(Sweep, GuardsAndValidation) {
  SweepConfig c;
  c.model = Model::gue;
  c.ns = {13};
  c.params = {0.1};
  EXPECT_THROW(run_sweep(c), GuardError);
  c.ns = {};
  EXPECT_THROW(run_sweep(c), std::invalid_argument);
}

TEST(Sweep, ProgressCallbackPerSize) {
  SweepConfig c;
  c.ns = {2, 3};
  c.t_counts = {1};
  c.instances = 2;
  int calls = 0;
  run_sweep(c, [&](const SweepResult& partial) {
    ++calls;
    EXPECT_FALSE(partial.complete);
  });
  EXPECT_EQ(calls, 2);
}

TEST(Curves, SreCurvesUseDensityAndTimeSquared) {
  std::vector<SweepRow> rows{{"clifford_t", 4, 2, "n_t", "sre", 2.0, 0.8, 0.0, 1},
                             {"clifford_t", 4, 0, "n_t", "sre", 2.0, 0.0, 0.0, 1},
                             {"gue", 3, 0.5, "t", "sre", 2.0, 0.3, 0.0, 1},
                             {"gue", 3, 0.5, "t", "fidelity", 0.0, 0.9, 0.0, 1}};
  const auto curves = sre_curves(rows, 2.0);
  EXPECT_EQ(curves.at(4).x, (std::vector<double>{0.0, 0.5}));
  EXPECT_EQ(curves.at(4).y, (std::vector<double>{0.0, 0.2}));
  EXPECT_EQ(curves.at(3).x, (std::vector<double>{0.25}));
  EXPECT_EQ(curves.at(3).y, (std::vector<double>{0.3}));
}

TEST(Comparison, ProducesOneDistancePerTime) {
  const ModelComparison m = compare_models(3, {0.0, 0.5}, 200, 3, 5, 10);
  ASSERT_EQ(m.total_variation.size(), 2u);
  for (double tv : m.total_variation) {
    EXPECT_GE(tv, 0.0);
    EXPECT_LE(tv, 1.0);
  }
}
