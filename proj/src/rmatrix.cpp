#include "qsc/rmatrix.hpp"

#include <map>

#include "qsc/errors.hpp"

namespace qsc {

int r_exponent2(const RootSystem& rs, int j) {
  const LieSeries& lie = rs.lie;
  if (lie.series == Series::B && j == lie.n + 1) return 1;
  return rs.two_rho_of_basis(j);
}

QMatrix build_R(const LieSeries& lie) {
  const int N = lie.N;
  QMatrix R(static_cast<std::size_t>(N * N));
  const QScalar q = QScalar::q();
  const QScalar qq = q - q.inverse();
  if (lie.series == Series::A) {
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) R(tensor_index(N, i, j), tensor_index(N, i, j)) = i == j ? q : QScalar(1);
    }
    for (int i = 1; i <= N; ++i) {
      for (int j = i + 1; j <= N; ++j) R(tensor_index(N, j, i), tensor_index(N, i, j)) += qq;
    }
    return R;
  }
  const RootSystem rs = build_root_system(lie);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      const int e = (i == j ? 1 : 0) - (i == lie.prime(j) ? 1 : 0);
      R(tensor_index(N, i, j), tensor_index(N, i, j)) += QScalar::q_power(e);
    }
  }
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j < i; ++j) {
      R(tensor_index(N, i, j), tensor_index(N, j, i)) += qq;
      const int kk = rs.kappa[static_cast<std::size_t>(i - 1)] * rs.kappa[static_cast<std::size_t>(j - 1)];
      const int e = (r_exponent2(rs, i) - r_exponent2(rs, j)) / 2;
      R(tensor_index(N, i, lie.prime(i)), tensor_index(N, j, lie.prime(j))) -= qq * QScalar::q_power(e) * QScalar(kk);
    }
  }
  return R;
}

QMatrix flip(int N) {
  QMatrix P(static_cast<std::size_t>(N * N));
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) P(tensor_index(N, j, i), tensor_index(N, i, j)) = QScalar(1);
  }
  return P;
}

namespace {

int root_dim(std::size_t d) {
  int N = 1;
  while (static_cast<std::size_t>(N * N) < d) ++N;
  if (static_cast<std::size_t>(N * N) != d) throw DimensionMismatch("dimension is not a perfect square");
  return N;
}

}  // namespace

QMatrix build_S(const QMatrix& R) { return flip(root_dim(R.rows())) * R; }

QScalar invariant_eigenvalue(const LieSeries& lie) {
  const int eps = lie.epsilon();
  return QScalar::q_power(eps - lie.N) * QScalar(eps);
}

QMatrix build_varpi(const QMatrix& S, const LieSeries& lie) {
  if (lie.series == Series::A) throw PreconditionViolated("varpi exists only for so and sp");
  const std::size_t d = S.rows();
  const QScalar q = QScalar::q();
  const QMatrix I = QMatrix::identity(d);
  const QScalar lambda = invariant_eigenvalue(lie);
  const QScalar denom = (lambda - q) * (lambda + q.inverse());
  if (denom.is_zero()) throw PreconditionViolated("degenerate varpi normalization");
  QMatrix num = (S - I * q) * (S + I * q.inverse());
  return num * denom.inverse();
}

RMatrixData build_rmatrix_data(const LieSeries& lie) {
  RMatrixData d;
  d.lie = lie;
  d.R = build_R(lie);
  d.S = build_S(d.R);
  d.epsilon = lie.epsilon();
  if (lie.series != Series::A) d.varpi = build_varpi(d.S, lie);
  return d;
}

namespace {

using SparseVec = std::map<std::size_t, QScalar>;
using SparseCols = std::vector<std::vector<std::pair<std::size_t, QScalar>>>;

SparseCols columns(const QMatrix& S) {
  SparseCols cols(S.cols());
  for (std::size_t r = 0; r < S.rows(); ++r) {
    for (std::size_t c = 0; c < S.cols(); ++c) {
      if (!S(r, c).is_zero()) cols[c].emplace_back(r, S(r, c));
    }
  }
  return cols;
}

// S acting on the first two (first = true) or last two factors of V⊗V⊗V.
SparseVec apply(const SparseCols& cols, std::size_t N, bool first, const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, x] : v) {
    const std::size_t pair = first ? idx / N : idx % (N * N);
    for (const auto& [r, s] : cols[pair]) {
      const std::size_t to = first ? r * N + idx % N : (idx / (N * N)) * N * N + r;
      out[to] += s * x;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

CheckRecord check_braid(const QMatrix& S, int N) {
  const auto cols = columns(S);
  const auto n = static_cast<std::size_t>(N);
  for (std::size_t c = 0; c < n * n * n; ++c) {
    SparseVec e{{c, QScalar(1)}};
    SparseVec lhs = apply(cols, n, true, apply(cols, n, false, apply(cols, n, true, e)));
    SparseVec rhs = apply(cols, n, false, apply(cols, n, true, apply(cols, n, false, e)));
    if (lhs != rhs) {
      CheckRecord rec = verdict("braid", false, "column " + std::to_string(c + 1) + " differs");
      for (std::size_t r = 0; r < n * n * n; ++r) {
        QScalar a = lhs.count(r) ? lhs[r] : QScalar();
        QScalar b = rhs.count(r) ? rhs[r] : QScalar();
        if (!(a == b)) {
          rec.mismatch = EntryMismatch{r, c, a.to_string(), b.to_string()};
          break;
        }
      }
      return rec;
    }
  }
  return verdict("braid", true, "S12 S23 S12 = S23 S12 S23 on dim " + std::to_string(n * n * n));
}

CheckRecord check_annihilator(const QMatrix& S, const LieSeries& lie) {
  const QScalar q = QScalar::q();
  const QMatrix I = QMatrix::identity(S.rows());
  QMatrix p = (S - I * q) * (S + I * q.inverse());
  if (lie.series == Series::A) return expect_zero("hecke", p);
  return expect_zero("cubic_annihilator", p * (S - I * invariant_eigenvalue(lie)));
}

std::vector<CheckRecord> check_varpi(const QMatrix& varpi, const QMatrix& S, const LieSeries& lie) {
  std::vector<CheckRecord> out;
  out.push_back(compare_matrices("varpi_idempotent", varpi * varpi, varpi));
  const std::size_t r = rank(varpi);
  out.push_back(verdict("varpi_rank_one", r == 1, "rank " + std::to_string(r)));
  const QScalar tr = varpi.trace();
  out.push_back(verdict("varpi_trace_one", tr.is_one(), "trace " + tr.to_string()));
  out.push_back(compare_matrices("varpi_eigenline", S * varpi, varpi * invariant_eigenvalue(lie)));
  return out;
}

}  // namespace qsc
