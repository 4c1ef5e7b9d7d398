#include <gtest/gtest.h>

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

}  // namespace

TEST(NaturalRep, DefiningRelations) {
  for (const auto& lie : series_upto(8)) {
    const NaturalRep rep = build_natural_rep(lie);
    for (const auto& r : check_defining_relations(rep, build_root_system(lie))) {
      EXPECT_TRUE(r.pass) << lie.label() << " " << r.name << " " << r.detail;
    }
  }
}

TEST(NaturalRep, RttCompatibility) {
  for (const auto& lie : series_upto(7)) {
    const NaturalRep rep = build_natural_rep(lie);
    for (const auto& r : check_rtt_compat(rep, build_R(lie))) {
      EXPECT_TRUE(r.pass) << lie.label() << " " << r.name << " " << r.detail;
    }
  }
}

TEST(NaturalRep, Sl2Matrices) {
  const NaturalRep rep = build_natural_rep(LieSeries::from_algebra("sl", 2));
  EXPECT_EQ(rep.e[0], unit<QScalar>(2, 1, 2));
  EXPECT_EQ(rep.f[0], unit<QScalar>(2, 2, 1));
  QMatrix k(2);
  k(0, 0) = QScalar::q();
  k(1, 1) = QScalar::q().inverse();
  EXPECT_EQ(rep.k[0], k);
  EXPECT_EQ(rep.F[0], rep.k[0] * rep.f[0]);
}

TEST(NaturalRep, CartanProduct) {
  const NaturalRep rep = build_natural_rep(LieSeries::from_algebra("sp", 6));
  EXPECT_EQ(rep.cartan({1, 0, 2}), rep.k[0] * rep.k[2] * rep.k[2]);
  EXPECT_EQ(rep.cartan({0, -1, 0}), rep.k_inv[1]);
  EXPECT_EQ(rep.cartan({0, 0, 0}), QMatrix::identity(6));
}

TEST(QTrace, Identity) {
  for (int N = 2; N <= 8; ++N) {
    const auto lie = LieSeries::from_algebra("sl", N);
    EXPECT_EQ(q_trace(QMatrix::identity(static_cast<std::size_t>(N)), build_root_system(lie)), q_integer(N));
  }
  for (int N = 3; N <= 8; ++N) {
    const auto lie = LieSeries::from_algebra("so", N);
    EXPECT_EQ(q_trace(QMatrix::identity(static_cast<std::size_t>(N)), build_root_system(lie)), q_integer(N - 1) + QScalar(1));
  }
  for (int N = 2; N <= 8; N += 2) {
    const auto lie = LieSeries::from_algebra("sp", N);
    EXPECT_EQ(q_trace(QMatrix::identity(static_cast<std::size_t>(N)), build_root_system(lie)), q_integer(N + 1) - QScalar(1));
  }
}
