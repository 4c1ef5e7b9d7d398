#pragma once
// R-matrices of the natural representation, the braided S = PR and the
// rank-one invariant projector varpi.

#include <optional>
#include <vector>

#include "qsc/check.hpp"
#include "qsc/matrix.hpp"
#include "qsc/rootdata.hpp"

namespace qsc {

struct RMatrixData {
  LieSeries lie;
  QMatrix R;
  QMatrix S;
  std::optional<QMatrix> varpi;  ///< B, C, D only
  int epsilon = 0;               ///< +1 orthogonal, -1 symplectic, 0 sl
};

/// Row index of v_i ⊗ v_j (1-based i, j) in the lexicographic tensor basis.
inline std::size_t tensor_index(int N, int i, int j) {
  return static_cast<std::size_t>((i - 1) * N + (j - 1));
}

/// Doubled exponents used inside R for basis index j. Equal to 2(rho, wt v_j)
/// except on the middle line of so(2n+1), where 1 is used so that R stays in
/// Z[q, q^-1] and intertwines the coproduct.
int r_exponent2(const RootSystem& rs, int j);

QMatrix build_R(const LieSeries& lie);
QMatrix flip(int N);
QMatrix build_S(const QMatrix& R);
/// eps q^(eps-N): the eigenvalue of S on the invariant line.
QScalar invariant_eigenvalue(const LieSeries& lie);
/// (S - q)(S + q^-1) / ((lambda - q)(lambda + q^-1)). Throws PreconditionViolated for sl.
QMatrix build_varpi(const QMatrix& S, const LieSeries& lie);
RMatrixData build_rmatrix_data(const LieSeries& lie);

CheckRecord check_braid(const QMatrix& S, int N);
/// Hecke relation for sl, cubic annihilator otherwise.
CheckRecord check_annihilator(const QMatrix& S, const LieSeries& lie);
/// varpi^2 = varpi, rank 1, trace 1, S varpi = lambda varpi.
std::vector<CheckRecord> check_varpi(const QMatrix& varpi, const QMatrix& S, const LieSeries& lie);

}  // namespace qsc
