#pragma once
// Case enumeration and parallel sweeps.

#include <string>
#include <vector>

#include "qsc/verifier.hpp"

namespace qsc {

/// Every (series, N <= Nmax, family, m, sign) case with default parameters.
/// series_filter holds "sl", "so", "sp"; empty means all.
std::vector<ClassSpec> enumerate_cases(int Nmax, const std::vector<std::string>& series_filter = {});

/// sl(2..6), so(5..8), sp(4, 6, 8) with both signs.
std::vector<ClassSpec> desk_cases();

struct SweepRow {
  std::string case_id;
  bool pass = false;
  std::vector<std::string> failing;
  std::string error;
  double ms = 0.0;
};

/// Runs full_report on default parameters. Rows follow the input order.
/// threads = 0 uses the hardware concurrency.
std::vector<SweepRow> run_sweep(const std::vector<ClassSpec>& cases, unsigned threads = 0,
                                const ReportOptions& options = {});

}  // namespace qsc
