#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qsc/matrix.hpp"

namespace qsc {

/// First differing entry of a failed identity, rendered as scalar literals.
struct EntryMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one exact identity check.
struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<EntryMismatch> mismatch;
  double ms = 0.0;
};

/// lhs == rhs entrywise; records the first differing entry on failure.
template <class T>
CheckRecord compare_matrices(std::string name, const Matrix<T>& lhs, const Matrix<T>& rhs) {
  CheckRecord rec;
  rec.name = std::move(name);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rec.detail = "shape mismatch";
    return rec;
  }
  if (auto d = first_difference(lhs, rhs)) {
    rec.mismatch = EntryMismatch{d->row, d->col, d->lhs.to_string(), d->rhs.to_string()};
    rec.detail = "entry (" + std::to_string(d->row + 1) + "," + std::to_string(d->col + 1) + ") differs";
    return rec;
  }
  rec.pass = true;
  return rec;
}

template <class T>
CheckRecord expect_zero(std::string name, const Matrix<T>& m) {
  return compare_matrices(std::move(name), m, Matrix<T>(m.rows(), m.cols()));
}

inline CheckRecord verdict(std::string name, bool pass, std::string detail = {}) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.pass = pass;
  rec.detail = std::move(detail);
  return rec;
}

/// Runs f() (returning a CheckRecord) and stores the elapsed wall time.
template <class F>
CheckRecord timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckRecord rec = f();
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace qsc
