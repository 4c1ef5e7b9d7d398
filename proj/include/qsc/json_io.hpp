#pragma once
// JSON forms of cases, points and reports. Scalars travel as literals.

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "qsc/coideal.hpp"
#include "qsc/verifier.hpp"

namespace qsc {

using Json = nlohmann::ordered_json;

/// One case as given on the command line or in a config file.
struct CaseConfig {
  std::string series = "sl";  ///< sl | so | sp
  int N = 2;
  std::string family = "t2";  ///< t2 | t4
  int m = 0;
  int sign = 1;
  int unit = 0;
  std::map<std::string, std::string> params;  ///< name -> scalar literal
  std::vector<std::string> checks;            ///< check groups; empty means all

  friend bool operator==(const CaseConfig&, const CaseConfig&) = default;
};

Json to_json(const CaseConfig& c);
/// Throws InvalidSpec on a malformed document.
CaseConfig case_config_from_json(const Json& j);

ClassSpec spec_of(const CaseConfig& c);
/// Defaults with the overrides of c applied. Throws InvalidSpec or ParseError.
PointParams params_of(const CaseConfig& c, const ClassSpec& spec);
ReportOptions options_of(const CaseConfig& c);

template <class T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}
/// Array of rows of scalar literals. Throws InvalidSpec or ParseError.
QMatrix qmatrix_from_json(const Json& j);

Json to_json(const CheckRecord& r, bool with_timing = false);
/// {case, param_digest, pass, checks, timings}.
Json to_json(const VerificationReport& r);
/// The same without the timings member, for byte-stable comparisons.
Json canonical_json(const VerificationReport& r);

Json params_to_json(const ClassSpec& spec, const PointParams& params);
Json to_json(const QuantumPoint& p);
/// Pi_l, bar Pi_l, tilde table, arcs and per-alpha coideal data.
Json satake_json(const ThetaData& td, const StabilizerSet& ss);

}  // namespace qsc
