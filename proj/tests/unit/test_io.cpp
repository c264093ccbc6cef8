#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "stabscope/error.hpp"
#include "stabscope/io.hpp"
#include "stabscope/oracles.hpp"

using namespace stabscope;

TEST(Io, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Io, SweepCsvRoundTrip) {
  std::vector<SweepRow> rows{{"gue", 4, 0.1, "t", "sre", 2.0, 0.04, 0.001, 20},
                             {"gue", 4, 0.2, "t", "sre", 2.0, 1.0 / 3.0, 0.002, 20}};
  std::stringstream ss;
  write_sweep_csv(ss, rows, {{"seed", "1"}, {"model", "gue"}}, true);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("# stabscope sweep v1", 0), 0u);
  const SweepTable t = read_sweep_csv(ss);
  EXPECT_TRUE(t.complete);
  EXPECT_EQ(t.metadata.at("seed"), "1");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1].mean, 1.0 / 3.0);
  EXPECT_EQ(t.rows[1].param_kind, "t");
  EXPECT_EQ(t.rows[0].instances, 20);
}

TEST(Io, IncompleteSweepIsFlagged) {
  std::stringstream ss;
  write_sweep_csv(ss, {}, {}, false);
  EXPECT_FALSE(read_sweep_csv(ss).complete);
}

TEST(Io, RejectsMalformedCsv) {
  std::stringstream bad_header("model,n\n");
  EXPECT_THROW(read_sweep_csv(bad_header), ParseError);
  std::stringstream bad_row("# stabscope sweep v1\nmodel,n,param,param_kind,alpha,mean,stderr,instances\ngue,x,0,t,2,0,0,1\n");
  EXPECT_THROW(read_sweep_csv(bad_row), ParseError);
}

TEST(Io, MeasuresCsvHasMeasureColumn) {
  std::vector<SweepRow> rows{{"gue", 4, 0.1, "t", "fidelity", 0.0, 0.99, 0.001, 20}};
  std::stringstream ss;
  write_measures_csv(ss, rows, {}, true);
  EXPECT_NE(ss.str().find("# stabscope measures v1"), std::string::npos);
  EXPECT_NE(ss.str().find("fidelity"), std::string::npos);
}

TEST(Io, MeasuresCsvRoundTripKeepsAlpha) {
  std::vector<SweepRow> rows{{"clifford_t", 6, 3, "n_t", "sre_annealed", 2.0, 0.8255, 0.004, 50},
                             {"clifford_t", 6, 3, "n_t", "q_realized", 0.0, 0.5, 0.0, 50}};
  std::stringstream ss;
  write_measures_csv(ss, rows, {}, true);
  const SweepTable t = read_sweep_csv(ss);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].measure, "sre_annealed");
  EXPECT_EQ(t.rows[0].alpha, 2.0);
  EXPECT_EQ(t.rows[0].mean, 0.8255);
  EXPECT_EQ(t.rows[1].measure, "q_realized");
  EXPECT_TRUE(t.complete);
}

TEST(Io, StateJsonRoundTrip) {
  Rng rng(1);
  const StateVector psi = haar_random_state(3, rng);
  const StateVector back = state_from_json(Json::parse(to_json(psi).dump()));
  for (std::size_t i = 0; i < psi.dim(); ++i) EXPECT_EQ(back[i], psi[i]);
  Json broken = to_json(psi);
  broken["n"] = 2;
  EXPECT_ANY_THROW(state_from_json(broken));
}

TEST(Io, CircuitJsonRoundTrip) {
  Rng rng(2);
  const CliffordCircuit c = sample_random_clifford(3, rng);
  const CliffordCircuit back = circuit_from_json(Json::parse(to_json(c).dump()), 3);
  ASSERT_EQ(back.gates().size(), c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    EXPECT_EQ(back.gates()[i].kind, c.gates()[i].kind);
    EXPECT_EQ(back.gates()[i].control, c.gates()[i].control);
    EXPECT_EQ(back.gates()[i].target, c.gates()[i].target);
  }
}

TEST(Io, OracleResultRoundTrip) {
  Rng rng(3);
  const OracleResult r = stabilizer_fidelity(haar_random_state(2, rng));
  const OracleResult back = oracle_result_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.value, r.value);
  EXPECT_EQ(back.closest, r.closest);
  EXPECT_EQ(back.measure, r.measure);
  EXPECT_EQ(back.certified, r.certified);
}

TEST(Io, ReportsRoundTripWithNaN) {
  CrossingReport r;
  r.alpha = 2.0;
  r.alignment = "scale";
  PairCrossing p;
  p.n_a = 4;
  p.n_b = 6;
  p.degenerate = true;
  p.x = std::nan("");
  r.pairs.push_back(p);
  r.pooled = std::nan("");
  r.reference = 2.40942;
  const CrossingReport back = crossing_report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_TRUE(std::isnan(back.pooled));
  EXPECT_TRUE(back.pairs[0].degenerate);
  EXPECT_EQ(back.reference, r.reference);
  EXPECT_FALSE(back.window.has_value());

  BoundCheck b{"stabilizer_nullity", 0.0, 1.0, 0.5, true, 0.5};
  const BoundCheck bb = bound_check_from_json(to_json(b));
  EXPECT_EQ(bb.name, b.name);
  EXPECT_EQ(bb.slack, b.slack);

  CertificationOutcome o;
  o.estimate = 0.93;
  o.samples = 10;
  EXPECT_EQ(certification_outcome_from_json(to_json(o)).estimate, 0.93);
}
