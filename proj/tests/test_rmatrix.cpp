#include <gtest/gtest.h>

#include "qsc/errors.hpp"
#include "qsc/natrep.hpp"
#include "qsc/rmatrix.hpp"

using namespace qsc;

namespace {

std::vector<LieSeries> series_upto(int Nmax) {
  std::vector<LieSeries> out;
  for (int N = 2; N <= Nmax; ++N) out.push_back(LieSeries::from_algebra("sl", N));
  for (int N = 3; N <= Nmax; ++N) out.push_back(LieSeries::from_algebra("so", N));
  for (int N = 2; N <= Nmax; N += 2) out.push_back(LieSeries::from_algebra("sp", N));
  return out;
}

// Dense braid check on V⊗V⊗V, written independently of check_braid.
bool dense_braid(const QMatrix& S, std::size_t N) {
  const QMatrix I = QMatrix::identity(N);
  const QMatrix S12 = kron(S, I);
  const QMatrix S23 = kron(I, S);
  return S12 * S23 * S12 == S23 * S12 * S23;
}

}  // namespace

TEST(RMatrix, Sl2ExplicitEntries) {
  const QScalar q = QScalar::q();
  QMatrix expected(4);
  expected(0, 0) = q;
  expected(1, 1) = QScalar(1);
  expected(2, 2) = QScalar(1);
  expected(3, 3) = q;
  // v2⊗v1 row, v1⊗v2 column
  expected(2, 1) = q - q.inverse();
  EXPECT_EQ(build_R(LieSeries::from_algebra("sl", 2)), expected);
}

TEST(RMatrix, ClassicalLimitIsIdentity) {
  for (const auto& lie : series_upto(6)) {
    const QMatrix R = build_R(lie);
    const auto n2 = static_cast<std::size_t>(lie.N * lie.N);
    EXPECT_EQ(eval_at_one(R), CMatrix::identity(n2)) << lie.label();
  }
}

TEST(RMatrix, BraidAgreesWithDenseOracle) {
  for (const auto& lie : series_upto(4)) {
    const QMatrix S = build_S(build_R(lie));
    const bool sparse = check_braid(S, lie.N).pass;
    EXPECT_TRUE(sparse) << lie.label();
    EXPECT_EQ(sparse, dense_braid(S, static_cast<std::size_t>(lie.N))) << lie.label();
  }
}

TEST(RMatrix, BraidFailsForPerturbedS) {
  const LieSeries lie = LieSeries::from_algebra("so", 3);
  QMatrix S = build_S(build_R(lie));
  S(0, 0) *= QScalar::q();
  EXPECT_FALSE(check_braid(S, lie.N).pass);
  EXPECT_FALSE(dense_braid(S, 3));
}

TEST(RMatrix, StructuralSuite) {
  for (const auto& lie : series_upto(8)) {
    const RMatrixData d = build_rmatrix_data(lie);
    EXPECT_TRUE(check_braid(d.S, lie.N).pass) << lie.label();
    const CheckRecord ann = check_annihilator(d.S, lie);
    EXPECT_TRUE(ann.pass) << lie.label();
    EXPECT_EQ(ann.name, lie.series == Series::A ? "hecke" : "cubic_annihilator");
    if (lie.series == Series::A) {
      EXPECT_FALSE(d.varpi.has_value());
    } else {
      ASSERT_TRUE(d.varpi.has_value());
      for (const auto& r : check_varpi(*d.varpi, d.S, lie)) EXPECT_TRUE(r.pass) << lie.label() << " " << r.name;
    }
  }
}

TEST(RMatrix, HeckeByHand) {
  // (S - q)(S + q^-1) = 0 for sl(3), computed directly
  const QMatrix S = build_S(build_R(LieSeries::from_algebra("sl", 3)));
  const QMatrix I = QMatrix::identity(9);
  const QScalar q = QScalar::q();
  EXPECT_TRUE(((S - I * q) * (S + I * q.inverse())).is_zero());
}

TEST(RMatrix, InvariantEigenvalue) {
  EXPECT_EQ(invariant_eigenvalue(LieSeries::from_algebra("so", 5)), QScalar::q_power(-4));
  EXPECT_EQ(invariant_eigenvalue(LieSeries::from_algebra("sp", 4)), -QScalar::q_power(-5));
  EXPECT_THROW(build_varpi(build_S(build_R(LieSeries::from_algebra("sl", 3))), LieSeries::from_algebra("sl", 3)),
               PreconditionViolated);
}

TEST(RMatrix, VarpiProjectsOntoInvariantVector) {
  // rank one, trace one, supported on the v_i ⊗ v_i' lines
  for (int N : {3, 4, 5, 6}) {
    const LieSeries lie = LieSeries::from_algebra("so", N);
    const QMatrix v = *build_rmatrix_data(lie).varpi;
    EXPECT_EQ(rank(v), 1u);
    EXPECT_EQ(v.trace(), QScalar(1));
    EXPECT_EQ(v * v, v);
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) {
        if (j == lie.prime(i)) continue;
        for (std::size_t c = 0; c < v.cols(); ++c) EXPECT_TRUE(v(tensor_index(N, i, j), c).is_zero());
      }
    }
  }
}
