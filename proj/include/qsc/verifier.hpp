#pragma once
// Exact verification of a quantum point against every identity of its class.

#include <set>
#include <string>
#include <vector>

#include "qsc/check.hpp"
#include "qsc/classical.hpp"
#include "qsc/coideal.hpp"
#include "qsc/natrep.hpp"
#include "qsc/repoints.hpp"
#include "qsc/rmatrix.hpp"

namespace qsc {

/// Shared per-series data, built once.
const RootSystem& root_system(const LieSeries& lie);
const RMatrixData& rmatrix_data(const LieSeries& lie);
const NaturalRep& natural_rep(const LieSeries& lie);

/// S A2 S A2 = A2 S A2 S with A2 = I⊗A.
CheckRecord check_reflection(const QMatrix& A, const QMatrix& S);
/// A2 S A2 varpi = eps q^(-N+eps) varpi and varpi A2 S A2 = the same.
CheckRecord check_oc(const QMatrix& A, const QMatrix& S, const QMatrix& varpi, int eps);
/// Minimal polynomial of the class, plus eigenvalue multiplicities by rank.
std::vector<CheckRecord> check_min_poly(const QMatrix& A, const ClassSpec& spec);
CheckRecord check_q_trace(const QMatrix& A, const ClassSpec& spec, const RootSystem& rs);
/// Expected q-trace of the class.
QScalar expected_q_trace(const ClassSpec& spec);

/// Check groups accepted by ReportOptions::groups.
const std::vector<std::string>& check_groups();

struct ReportOptions {
  std::set<std::string> groups;  ///< empty means all
  bool wants(const std::string& g) const { return groups.empty() || groups.count(g) > 0; }
};

struct VerificationReport {
  std::string case_id;
  std::string param_digest;
  std::vector<CheckRecord> checks;
  double total_ms = 0.0;

  bool pass() const { return all_pass(checks); }
  std::vector<std::string> failing() const;
};

/// Hex FNV-1a over the parameter literals.
std::string param_digest(const ClassSpec& spec, const PointParams& params);

/// Runs every applicable check. Parameters are not required to satisfy the
/// constraint; a violation shows up as a failing param_constraint record.
VerificationReport full_report(const ClassSpec& spec, const PointParams& params, const ReportOptions& options = {});

}  // namespace qsc
