#include "qsc/verifier.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

template <class T>
class SeriesCache {
 public:
  template <class Build>
  const T& get(const LieSeries& lie, Build build) {
    const auto key = std::make_pair(static_cast<int>(lie.series), lie.n);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = items_.find(key);
      if (it != items_.end()) return *it->second;
    }
    auto built = std::make_unique<T>(build(lie));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = items_.emplace(key, std::move(built));
    return *it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<T>> items_;
};

GaussRational determinant(CMatrix m) {
  const std::size_t n = m.rows();
  GaussRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return GaussRational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const GaussRational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const GaussRational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

QScalar zeta(const ClassSpec& spec) { return QScalar(unit_scalar(spec.unit)); }

}  // namespace

const RootSystem& root_system(const LieSeries& lie) {
  static SeriesCache<RootSystem> cache;
  return cache.get(lie, build_root_system);
}

const RMatrixData& rmatrix_data(const LieSeries& lie) {
  static SeriesCache<RMatrixData> cache;
  return cache.get(lie, build_rmatrix_data);
}

const NaturalRep& natural_rep(const LieSeries& lie) {
  static SeriesCache<NaturalRep> cache;
  return cache.get(lie, build_natural_rep);
}

CheckRecord check_reflection(const QMatrix& A, const QMatrix& S) {
  if (!A.is_square() || !S.is_square() || A.rows() * A.rows() != S.rows()) {
    throw DimensionMismatch("reflection equation: A must be N x N and S must be N^2 x N^2");
  }
  const QMatrix A2 = kron(QMatrix::identity(A.rows()), A);
  const QMatrix SA2 = S * A2;
  const QMatrix A2S = A2 * S;
  return compare_matrices("reflection", SA2 * SA2, A2S * A2S);
}

CheckRecord check_oc(const QMatrix& A, const QMatrix& S, const QMatrix& varpi, int eps) {
  if (!A.is_square() || A.rows() * A.rows() != S.rows() || S.rows() != varpi.rows()) {
    throw DimensionMismatch("OC: shapes differ");
  }
  const int N = static_cast<int>(A.rows());
  const QMatrix A2 = kron(QMatrix::identity(A.rows()), A);
  const QMatrix middle = A2 * S * A2;
  const QMatrix rhs = varpi * (QScalar(eps) * QScalar::q_power(-N + eps));
  CheckRecord r = compare_matrices("oc", middle * varpi, rhs);
  if (!r.pass) {
    r.detail = "right: " + r.detail;
    return r;
  }
  r = compare_matrices("oc", varpi * middle, rhs);
  if (!r.pass) r.detail = "left: " + r.detail;
  return r;
}

std::vector<CheckRecord> check_min_poly(const QMatrix& A, const ClassSpec& spec) {
  const int N = spec.lie.N;
  const QMatrix I = QMatrix::identity(static_cast<std::size_t>(N));
  QScalar root_p, root_m;
  std::size_t mult_p = 0, mult_m = 0;
  std::string roots;
  if (spec.family == Family::T2) {
    const QScalar z = zeta(spec);
    root_p = -z * QScalar::q_power(-spec.P());
    root_m = z * QScalar::q_power(-spec.M());
    mult_p = static_cast<std::size_t>(spec.M());
    mult_m = static_cast<std::size_t>(spec.P());
    roots = "P=" + std::to_string(spec.P()) + ", M=" + std::to_string(spec.M());
  } else {
    const QScalar r = QScalar::i() * QScalar::q_power(-N / 2 + spec.lie.epsilon());
    root_p = r;
    root_m = -r;
    mult_p = mult_m = static_cast<std::size_t>(N / 2);
    roots = "roots ±" + r.to_string();
  }
  const QMatrix a = A - I * root_p;
  const QMatrix b = A - I * root_m;
  std::vector<CheckRecord> out;
  CheckRecord r = expect_zero("min_poly", a * b);
  if (r.pass) r.detail = roots;
  out.push_back(r);
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  const bool ok = ra == static_cast<std::size_t>(N) - mult_p && rb == static_cast<std::size_t>(N) - mult_m;
  out.push_back(verdict("eigen_multiplicities", ok,
                        "multiplicities " + std::to_string(N - static_cast<int>(ra)) + " and " +
                            std::to_string(N - static_cast<int>(rb)) + ", expected " + std::to_string(mult_p) +
                            " and " + std::to_string(mult_m)));
  return out;
}

QScalar expected_q_trace(const ClassSpec& spec) {
  if (spec.family == Family::T4) return QScalar(0);
  const int P = spec.P();
  const int M = spec.M();
  switch (spec.lie.series) {
    case Series::A: return zeta(spec) * (q_integer(P) - q_integer(M));
    case Series::C: return q_integer(P + 1) - q_integer(M + 1);
    default: return q_integer(P - 1) - q_integer(M - 1);
  }
}

CheckRecord check_q_trace(const QMatrix& A, const ClassSpec& spec, const RootSystem& rs) {
  const QScalar got = q_trace(A, rs);
  const QScalar want = expected_q_trace(spec);
  CheckRecord r = verdict("q_trace", got == want, "Tr_q = " + got.to_string());
  if (!r.pass) {
    r.detail += ", expected " + want.to_string();
    r.mismatch = EntryMismatch{0, 0, got.to_string(), want.to_string()};
  }
  return r;
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> g = {"params", "reflection", "oc",         "min_poly",
                                             "q_trace", "classical", "stabilizer", "poisson"};
  return g;
}

std::vector<std::string> VerificationReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

std::string param_digest(const ClassSpec& spec, const PointParams& params) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [k, v] : params.values) feed(param_name(spec, k) + "=" + v.to_string() + ";");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VerificationReport full_report(const ClassSpec& spec, const PointParams& params, const ReportOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  spec.validate();
  VerificationReport rep;
  rep.case_id = spec.id();
  rep.param_digest = param_digest(spec, params);
  auto add = [&](CheckRecord r) { rep.checks.push_back(std::move(r)); };
  auto add_all = [&](std::vector<CheckRecord> rs) {
    for (auto& r : rs) add(std::move(r));
  };

  if (options.wants("params")) {
    const ParamValidation v = validate_params(spec, params);
    std::string detail;
    for (const auto& s : v.violations) detail += (detail.empty() ? "" : "; ") + s;
    add(verdict("param_constraint", v.ok, detail));
  }
  const QuantumPoint pt = quantum_point_unchecked(spec, params);
  const RMatrixData& rd = rmatrix_data(spec.lie);
  const RootSystem& rs = root_system(spec.lie);

  if (options.wants("reflection")) add(timed([&] { return check_reflection(pt.A, rd.S); }));
  if (options.wants("oc") && rd.varpi) add(timed([&] { return check_oc(pt.A, rd.S, *rd.varpi, rd.epsilon); }));
  if (options.wants("min_poly")) add_all(check_min_poly(pt.A, spec));
  if (options.wants("q_trace")) add(check_q_trace(pt.A, spec, rs));

  if (options.wants("classical")) {
    try {
      CheckRecord r = compare_matrices("classical_limit", eval_at_one(pt.A), pt.A0);
      add(r);
    } catch (const PoleAtOne&) {
      add(verdict("classical_limit", false, "a parameter has a pole at q = 1"));
    }
    const auto N = static_cast<std::size_t>(spec.lie.N);
    const CMatrix target = CMatrix::identity(N) * GaussRational(spec.family == Family::T2 ? 1 : -1);
    CMatrix sq = pt.A0 * pt.A0;
    if (spec.lie.series == Series::A) {
      const GaussRational z = unit_scalar(spec.unit);
      sq *= (z * z).inverse();
    }
    CheckRecord r = compare_matrices("classical_involution", sq, target);
    if (r.pass) r.detail = spec.family == Family::T2 ? "A0^2 = I" : "A0^2 = -I";
    add(r);
    add(verdict("det_A0", true, determinant(pt.A0).to_string()));
  }

  if (options.wants("stabilizer")) {
    const ThetaData td = theta_for_class(spec, rs);
    const StabilizerSet ss = build_stabilizer(natural_rep(spec.lie), td, params, pt.A);
    add_all(check_stabilizer(ss, pt.A));
  }

  if (options.wants("poisson")) {
    const ClassicalAlgebraData& cd = classical_algebra(spec.lie);
    try {
      add(timed([&] { return check_bivector_zero(cd, pt.A0); }));
    } catch (const Error& e) {
      add(verdict("poisson_bivector", false, e.what()));
    }
    try {
      add(check_lemma2(cd, pt.A0));
    } catch (const Error& e) {
      add(verdict("poisson_omega_part", false, e.what()));
    }
  }
  rep.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace qsc
