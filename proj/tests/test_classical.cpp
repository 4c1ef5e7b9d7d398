#include <gtest/gtest.h>

#include "qsc/classical.hpp"
#include "qsc/errors.hpp"
#include "qsc/repoints.hpp"
#include "qsc/sweep.hpp"

using namespace qsc;

namespace {

CMatrix diag(std::vector<GaussRational> d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix A0_of(const ClassSpec& s) { return quantum_point(s, default_params(s)).A0; }

ClassSpec make(const char* alg, int N, Family f, int m = 0) {
  return ClassSpec::make(LieSeries::from_algebra(alg, N), f, m, 1);
}

}  // namespace

TEST(ClassicalAlgebra, Sl2) {
  const auto& d = classical_algebra(LieSeries::from_algebra("sl", 2));
  ASSERT_EQ(d.dim(), 3u);
  EXPECT_EQ(d.e[0], unit<GaussRational>(2, 1, 2));
  EXPECT_EQ(d.f[0], unit<GaussRational>(2, 2, 1));
  EXPECT_EQ(d.h[0], diag({1, -1}));
}

TEST(ClassicalAlgebra, Dimensions) {
  EXPECT_EQ(classical_algebra(LieSeries::from_algebra("sl", 4)).dim(), 15u);
  EXPECT_EQ(classical_algebra(LieSeries::from_algebra("so", 5)).dim(), 10u);
  EXPECT_EQ(classical_algebra(LieSeries::from_algebra("so", 8)).dim(), 28u);
  EXPECT_EQ(classical_algebra(LieSeries::from_algebra("sp", 6)).dim(), 21u);
  EXPECT_EQ(classical_algebra(LieSeries::from_algebra("so", 5)).e.size(), 4u);
}

TEST(ClassicalAlgebra, StructuralChecks) {
  for (const char* alg : {"sl", "so", "sp"}) {
    for (int N : {4, 5, 6}) {
      if (std::string(alg) == "sp" && N % 2) continue;
      const auto& d = classical_algebra(LieSeries::from_algebra(alg, N));
      for (const auto& r : check_classical_algebra(d)) EXPECT_TRUE(r.pass) << alg << N << " " << r.name << " " << r.detail;
    }
  }
}

TEST(Bivector, IdentityVanishes) {
  const auto& d = classical_algebra(LieSeries::from_algebra("so", 5));
  EXPECT_TRUE(bivector_at(d, CMatrix::identity(5)).is_zero());
}

TEST(Bivector, VanishesAtDeskClassicalPoints) {
  for (const auto& s : desk_cases()) {
    const auto& d = classical_algebra(s.lie);
    const BivectorValue v = bivector_at(d, A0_of(s));
    EXPECT_TRUE(v.is_antisymmetric()) << s.id();
    EXPECT_TRUE(v.is_zero()) << s.id() << " largest " << v.largest().to_string();
  }
}

TEST(Bivector, NonzeroAtGenericTorusPoint) {
  const auto& d = classical_algebra(LieSeries::from_algebra("sl", 3));
  const CMatrix a = diag({4, 1, GaussRational(Rational(1, 4))});
  const BivectorValue v = bivector_at(d, a);
  EXPECT_FALSE(v.is_zero());
  EXPECT_TRUE(v.is_antisymmetric());
  EXPECT_THROW(check_lemma2(d, a), PreconditionViolated);
}

TEST(Bivector, SingularInputRejected) {
  const auto& d = classical_algebra(LieSeries::from_algebra("sl", 2));
  EXPECT_THROW(bivector_at(d, diag({1, 0})), SingularMatrix);
}

TEST(Lemma2, Examples) {
  const auto& sp4 = classical_algebra(LieSeries::from_algebra("sp", 4));
  EXPECT_TRUE(check_lemma2(sp4, A0_of(make("sp", 4, Family::T4))).pass);
  EXPECT_TRUE(check_lemma2(sp4, CMatrix::identity(4) * GaussRational(-1)).pass);
  const auto& so6 = classical_algebra(LieSeries::from_algebra("so", 6));
  EXPECT_TRUE(check_lemma2(so6, A0_of(make("so", 6, Family::T4))).pass);
}

TEST(Lemma2, ConjugatedPointsOutsideTheAnsatz) {
  // b A0 b^-1 with b a rational torus element of SO(5): Ad^2 = id still
  const auto s = make("so", 5, Family::T2, 1);
  const auto& d = classical_algebra(s.lie);
  const CMatrix b = diag({2, 3, 1, GaussRational(Rational(1, 3)), GaussRational(Rational(1, 2))});
  const CMatrix a = b * A0_of(s) * inverse(b);
  EXPECT_TRUE(check_lemma2(d, a).pass);
}

TEST(Lemma1, Equivariance) {
  const auto& d3 = classical_algebra(LieSeries::from_algebra("sl", 3));
  const CMatrix a = diag({4, 1, GaussRational(Rational(1, 4))});
  EXPECT_TRUE(check_lemma1_equivariance(d3, a, CMatrix::identity(3)).pass);
  EXPECT_TRUE(check_lemma1_equivariance(d3, a, diag({2, GaussRational(Rational(1, 3)), GaussRational(Rational(3, 2))})).pass);

  // signed permutation preserving the so(6) form: swap lines 1 and 6 and lines 2 and 5
  const auto s = make("so", 6, Family::T2, 1);
  const auto& d6 = classical_algebra(s.lie);
  CMatrix b(6);
  b(0, 5) = b(5, 0) = b(1, 4) = b(4, 1) = b(2, 2) = b(3, 3) = GaussRational(1);
  EXPECT_TRUE(check_lemma1_equivariance(d6, A0_of(s), b).pass);
}

TEST(Coordinates, RejectsMatrixOutsideAlgebra) {
  const auto& d = classical_algebra(LieSeries::from_algebra("sl", 2));
  EXPECT_THROW(coordinates(d, CMatrix::identity(2)), PreconditionViolated);
}
