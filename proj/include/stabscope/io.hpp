#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabscope/analysis.hpp"
#include "stabscope/certification.hpp"
#include "stabscope/clifford.hpp"
#include "stabscope/experiments.hpp"
#include "stabscope/oracles.hpp"
#include "stabscope/stabilizer_states.hpp"
#include "stabscope/statevector.hpp"

namespace stabscope {

using Json = nlohmann::json;

// Doubles in text outputs use 17 significant digits.
std::string format_double(double v);

// "# stabscope sweep v1", "# key=value" metadata, the column header, one row
// per SRE value, and "# complete" once every n is done.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     const std::map<std::string, std::string>& metadata, bool complete);
// Non-SRE measures (fidelity, dmin, q_realized, sre_annealed) with an extra measure
// column before alpha; alpha is 0 for measures that do not depend on it.
void write_measures_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                        const std::map<std::string, std::string>& metadata, bool complete);

struct SweepTable {
  std::map<std::string, std::string> metadata;
  std::vector<SweepRow> rows;
  bool complete = false;
};
SweepTable read_sweep_csv(std::istream& in);

std::map<std::string, std::string> sweep_metadata(const SweepConfig& config);

Json to_json(const StateVector& s);
StateVector state_from_json(const Json& j);

Json to_json(const CliffordCircuit& c);
CliffordCircuit circuit_from_json(const Json& j, int n);

Json to_json(const StabilizerStateDescriptor& d);
StabilizerStateDescriptor descriptor_from_json(const Json& j);

Json to_json(const OracleResult& r);
OracleResult oracle_result_from_json(const Json& j);

Json to_json(const BoundCheck& b);
BoundCheck bound_check_from_json(const Json& j);

Json to_json(const CrossingReport& r);
CrossingReport crossing_report_from_json(const Json& j);

Json to_json(const CollapseReport& r);
CollapseReport collapse_report_from_json(const Json& j);

Json to_json(const CertificationOutcome& o);
CertificationOutcome certification_outcome_from_json(const Json& j);

Json to_json(const SpectrumHistogram& h);

Json to_json(const ModelComparison& c);

}  // namespace stabscope
