#include "qsc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

void add_both(std::vector<ClassSpec>& out, const LieSeries& lie, Family f, int m) {
  for (int s : {1, -1}) out.push_back(ClassSpec::make(lie, f, m, s));
}

void add_series(std::vector<ClassSpec>& out, const std::string& alg, int N) {
  const LieSeries lie = LieSeries::from_algebra(alg, N);
  if (alg == "sl") {
    for (int m = 0; m <= N / 2; ++m) add_both(out, lie, Family::T2, m);
  } else if (alg == "so") {
    for (int m = 0; m <= N / 2; ++m) add_both(out, lie, Family::T2, m);
    if (N % 2 == 0) add_both(out, lie, Family::T4, 0);
  } else {
    for (int m = 0; m <= N / 2; m += 2) add_both(out, lie, Family::T2, m);
    add_both(out, lie, Family::T4, 0);
  }
}

bool wanted(const std::vector<std::string>& filter, const std::string& s) {
  return filter.empty() || std::find(filter.begin(), filter.end(), s) != filter.end();
}

}  // namespace

std::vector<ClassSpec> enumerate_cases(int Nmax, const std::vector<std::string>& series_filter) {
  for (const auto& s : series_filter) {
    if (s != "sl" && s != "so" && s != "sp") throw InvalidSpec("unknown series '" + s + "'");
  }
  std::vector<ClassSpec> out;
  for (const std::string alg : {"sl", "so", "sp"}) {
    if (!wanted(series_filter, alg)) continue;
    const int lo = alg == "so" ? 3 : 2;
    for (int N = lo; N <= Nmax; ++N) {
      if (alg == "sp" && N % 2) continue;
      add_series(out, alg, N);
    }
  }
  return out;
}

std::vector<ClassSpec> desk_cases() {
  std::vector<ClassSpec> out;
  for (int N = 2; N <= 6; ++N) add_series(out, "sl", N);
  for (int N = 5; N <= 8; ++N) add_series(out, "so", N);
  for (int N : {4, 6, 8}) add_series(out, "sp", N);
  return out;
}

std::vector<SweepRow> run_sweep(const std::vector<ClassSpec>& cases, unsigned threads, const ReportOptions& options) {
  std::vector<SweepRow> rows(cases.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      SweepRow& row = rows[k];
      row.case_id = cases[k].id();
      try {
        const VerificationReport r = full_report(cases[k], default_params(cases[k]), options);
        row.pass = r.pass();
        row.failing = r.failing();
        row.ms = r.total_ms;
      } catch (const std::exception& e) {
        row.pass = false;
        row.error = e.what();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace qsc
