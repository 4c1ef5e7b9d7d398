#include "qsc/natrep.hpp"

#include "qsc/errors.hpp"

namespace qsc {

QMatrix NaturalRep::cartan(const IntVec& c) const {
  const auto N = static_cast<std::size_t>(lie.N);
  QMatrix out(N);
  for (std::size_t j = 0; j < N; ++j) {
    int e = 0;
    for (std::size_t i = 0; i < c.size(); ++i) e += c[i] * k_exponents[i][j];
    out(j, j) = QScalar::q_power(e);
  }
  return out;
}

NaturalRep build_natural_rep(const LieSeries& lie) {
  NaturalRep rep;
  rep.lie = lie;
  const int N = lie.N;
  const int n = lie.n;
  auto pr = [&](int i) { return lie.prime(i); };
  auto E = [&](int i, int j) { return unit<QScalar>(static_cast<std::size_t>(N), static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  auto d = [](int a, int b) { return a == b ? 1 : 0; };
  for (int i = 1; i <= n; ++i) {
    IntVec ex(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) {
      int x = 0;
      if (lie.series == Series::A) {
        x = d(j, i) - d(j, i + 1);
      } else if (i < n) {
        x = d(j, i) - d(j, pr(i)) - d(j, i + 1) + d(j, pr(i + 1));
      } else if (lie.series == Series::B) {
        x = d(j, n) - d(j, pr(n));
      } else if (lie.series == Series::C) {
        x = 2 * d(j, n) - 2 * d(j, pr(n));
      } else {
        x = d(j, n - 1) - d(j, pr(n - 1)) + d(j, n) - d(j, pr(n));
      }
      ex[static_cast<std::size_t>(j - 1)] = x;
    }
    rep.k_exponents.push_back(ex);

    QMatrix e;
    if (lie.series == Series::A) {
      e = E(i, i + 1);
    } else if (i < n || lie.series == Series::B) {
      e = E(i, i + 1) - E(pr(i + 1), pr(i));
    } else if (lie.series == Series::D) {
      e = E(n - 1, n + 1) - E(pr(n + 1), pr(n - 1));
    } else {
      e = E(n, n + 1);
    }
    rep.e.push_back(e);
    rep.f.push_back(e.transpose());
  }
  for (int i = 0; i < n; ++i) {
    IntVec unit_vec(static_cast<std::size_t>(n), 0);
    unit_vec[static_cast<std::size_t>(i)] = 1;
    rep.k.push_back(rep.cartan(unit_vec));
    unit_vec[static_cast<std::size_t>(i)] = -1;
    rep.k_inv.push_back(rep.cartan(unit_vec));
    rep.F.push_back(rep.k.back() * rep.f[static_cast<std::size_t>(i)]);
  }
  return rep;
}

namespace {

CheckRecord first_failure(const std::string& name, const std::vector<CheckRecord>& parts) {
  for (const auto& p : parts) {
    if (!p.pass) {
      CheckRecord r = p;
      r.name = name;
      return r;
    }
  }
  return verdict(name, true);
}

}  // namespace

std::vector<CheckRecord> check_defining_relations(const NaturalRep& rep, const RootSystem& rs) {
  const int n = rep.lie.n;
  const auto N = static_cast<std::size_t>(rep.lie.N);
  const QMatrix I = QMatrix::identity(N);
  const QScalar q = QScalar::q();
  std::vector<CheckRecord> ke, kf, ef, kk;
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    for (int j = 0; j < n; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      const std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      const QScalar w = QScalar::q_power(rs.cartan_pairing[si][sj]);
      ke.push_back(compare_matrices("ke" + tag, rep.k[si] * rep.e[sj] * rep.k_inv[si], rep.e[sj] * w));
      kf.push_back(compare_matrices("kf" + tag, rep.k[si] * rep.f[sj] * rep.k_inv[si], rep.f[sj] * w.inverse()));
      QMatrix rhs(N);
      if (i == j) {
        const bool sp_end = rep.lie.symplectic() && i == n - 1;
        const QScalar denom = sp_end ? q * q - q.pow(-2) : q - q.inverse();
        rhs = (rep.k[si] - rep.k_inv[si]) * denom.inverse();
      }
      ef.push_back(compare_matrices("ef" + tag, rep.e[si] * rep.f[sj] - rep.f[sj] * rep.e[si], rhs));
      kk.push_back(compare_matrices("kk" + tag, rep.k[si] * rep.k[sj], rep.k[sj] * rep.k[si]));
    }
    kk.push_back(compare_matrices("kkinv" + std::to_string(i + 1), rep.k[si] * rep.k_inv[si], I));
  }
  return {first_failure("relation_i", ke), first_failure("relation_ii", kf), first_failure("relation_iii", ef),
          first_failure("relation_iv", kk)};
}

std::vector<CheckRecord> check_rtt_compat(const NaturalRep& rep, const QMatrix& R) {
  const auto N = static_cast<std::size_t>(rep.lie.N);
  const QMatrix I = QMatrix::identity(N);
  std::vector<CheckRecord> out;
  for (std::size_t i = 0; i < rep.e.size(); ++i) {
    const std::string s = std::to_string(i + 1);
    const QMatrix& e = rep.e[i];
    const QMatrix& f = rep.f[i];
    const QMatrix& k = rep.k[i];
    const QMatrix& ki = rep.k_inv[i];
    const QMatrix de = kron(k, e) + kron(e, I);
    const QMatrix de_op = kron(e, k) + kron(I, e);
    const QMatrix df = kron(f, ki) + kron(I, f);
    const QMatrix df_op = kron(ki, f) + kron(f, I);
    out.push_back(compare_matrices("rtt_e" + s, R * de, de_op * R));
    out.push_back(compare_matrices("rtt_f" + s, R * df, df_op * R));
    out.push_back(compare_matrices("rtt_k" + s, R * kron(k, k), kron(k, k) * R));
    out.push_back(compare_matrices("rtt_kinv" + s, R * kron(ki, ki), kron(ki, ki) * R));
  }
  return out;
}

QScalar q_trace(const QMatrix& A, const RootSystem& rs) {
  if (A.rows() != static_cast<std::size_t>(rs.lie.N) || !A.is_square()) {
    throw DimensionMismatch("q_trace: matrix size does not match N");
  }
  QScalar s;
  for (int j = 1; j <= rs.lie.N; ++j) {
    const auto sj = static_cast<std::size_t>(j - 1);
    if (!A(sj, sj).is_zero()) s += QScalar::q_power(rs.two_rho_of_basis(j)) * A(sj, sj);
  }
  return s;
}

}  // namespace qsc
