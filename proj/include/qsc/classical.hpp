#pragma once
// Classical Lie algebra data in the defining representation and the
// Poisson bivector of the reflection equation at a group element.

#include <string>
#include <vector>

#include "qsc/check.hpp"
#include "qsc/matrix.hpp"
#include "qsc/rootdata.hpp"

namespace qsc {

struct ClassicalAlgebraData {
  LieSeries lie;
  RootSystem roots;
  std::vector<CMatrix> h;  ///< [e_i, f_i], i = 1..n
  std::vector<CMatrix> e;  ///< per positive root, in roots.positive_roots order
  std::vector<CMatrix> f;  ///< normalized so tr(e_a f_a) = 1
  std::vector<CMatrix> basis;  ///< h, then e, then f
  std::vector<std::string> labels;
  CMatrix gram;    ///< tr(x_a x_b)
  CMatrix omega;   ///< coefficients of the invariant two-tensor, gram^-1
  CMatrix rho_cl;  ///< coefficients of sum e_a ∧ f_a

  std::size_t dim() const { return basis.size(); }
  std::size_t e_offset() const { return h.size(); }
  std::size_t f_offset() const { return h.size() + e.size(); }
};

ClassicalAlgebraData build_classical_algebra(const LieSeries& lie);
/// Shared, lazily built instance per series.
const ClassicalAlgebraData& classical_algebra(const LieSeries& lie);

/// Coordinates of y in the basis. Throws PreconditionViolated if y is not in g.
std::vector<GaussRational> coordinates(const ClassicalAlgebraData& data, const CMatrix& y);

/// M with Ad_a(x_j) = sum_k M(k, j) x_k. Throws SingularMatrix.
CMatrix adjoint_matrix(const ClassicalAlgebraData& data, const CMatrix& a);

/// Antisymmetric coefficient matrix B of sum B(j, k) x_j ⊗ x_k.
struct BivectorValue {
  CMatrix coeffs;

  bool is_zero() const { return coeffs.is_zero(); }
  bool is_antisymmetric() const;
  /// Entry of largest norm; zero when the bivector vanishes.
  GaussRational largest() const;
};

BivectorValue bivector_at(const ClassicalAlgebraData& data, const CMatrix& a);
/// (1⊗Ad_a - Ad_a⊗1)(omega) alone.
BivectorValue omega_part(const ClassicalAlgebraData& data, const CMatrix& a);

/// Requires Ad_a^2 = id (throws PreconditionViolated) and checks the omega part vanishes.
CheckRecord check_lemma2(const ClassicalAlgebraData& data, const CMatrix& a);
/// omega part at b a b^-1 equals (Ad_b⊗Ad_b) of the omega part at a.
CheckRecord check_lemma1_equivariance(const ClassicalAlgebraData& data, const CMatrix& a, const CMatrix& b);
CheckRecord check_bivector_zero(const ClassicalAlgebraData& data, const CMatrix& a);

/// Root-vector property, normalization, omega invariance.
std::vector<CheckRecord> check_classical_algebra(const ClassicalAlgebraData& data);

}  // namespace qsc
