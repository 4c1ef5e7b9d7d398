#include <gtest/gtest.h>

#include <random>

#include "qsc/coideal.hpp"
#include "qsc/errors.hpp"
#include "qsc/sweep.hpp"
#include "qsc/verifier.hpp"

using namespace qsc;

namespace {

ClassSpec make(const char* alg, int N, Family f, int m = 0, int sign = 1) {
  return ClassSpec::make(LieSeries::from_algebra(alg, N), f, m, sign);
}

// Valid parameters with random free values; partners follow the constraint.
PointParams random_params(const ClassSpec& s, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(1, 4), e(-3, 3), coin(0, 1);
  std::map<int, QScalar> o;
  for (auto [a, b] : param_pairs(s)) {
    if (a == b) {
      QScalar z = default_params(s).values.at(a);
      o[a] = coin(rng) ? z : -z;
    } else {
      o[a] = QScalar(GaussRational(c(rng), coin(rng) ? c(rng) : 0)) * QScalar::q_power(e(rng));
    }
  }
  return complete_params(s, o);
}

StabilizerSet stabilizer(const ClassSpec& s, const PointParams& p, QMatrix* A_out = nullptr) {
  const QuantumPoint pt = quantum_point(s, p);
  if (A_out) *A_out = pt.A;
  return build_stabilizer(natural_rep(s.lie), theta_for_class(s, root_system(s.lie)), p, pt.A);
}

}  // namespace

TEST(QCommutator, Basic) {
  const QMatrix x = unit<QScalar>(2, 1, 2), y = unit<QScalar>(2, 2, 1);
  EXPECT_EQ(q_commutator(x, y, QScalar(1)), x * y - y * x);
  EXPECT_EQ(q_commutator(x, y, QScalar::q()), x * y - y * x * QScalar::q());
}

TEST(FWord, Text) {
  const FWord w = f_tilde_word(make("so", 8, Family::T2, 1), 1);
  EXPECT_EQ(w.text(), "[[[[F1, F2]_q, F3]_q, F4]_q, F2]_q");
  EXPECT_EQ(w.letter_counts(4), (IntVec{1, 2, 1, 1}));
  EXPECT_THROW(f_tilde_word(make("sl", 6, Family::T2, 2), 3), InvalidSpec);
}

TEST(FWord, WeightsMatchTilde) {
  for (const auto& s : enumerate_cases(10)) {
    const RootSystem& rs = root_system(s.lie);
    const ThetaData td = theta_for_class(s, rs);
    const NaturalRep& rep = natural_rep(s.lie);
    for (int a : td.bar_pi_l) {
      const FWord w = f_tilde_word(s, a);
      EXPECT_EQ(w.letter_counts(s.lie.n), td.tilde_simple.at(a)) << s.id() << " a" << a;
      const QMatrix F = evaluate_word(rep, w);
      EXPECT_FALSE(F.is_zero()) << s.id() << " a" << a;
      // F~ has weight -alpha~
      const IntVec tilde = td.tilde.at(a);
      for (int i = 0; i < s.lie.n; ++i) {
        const int pairing = rs.pairing(rs.simple_roots[static_cast<std::size_t>(i)], tilde);
        const auto si = static_cast<std::size_t>(i);
        EXPECT_EQ(rep.k[si] * F * rep.k_inv[si], F * QScalar::q_power(-pairing)) << s.id() << " a" << a;
      }
    }
  }
}

TEST(SolveMixture, Sl2ByHand) {
  const auto s = make("sl", 2, Family::T2, 1);
  QMatrix A;
  const StabilizerSet ss = stabilizer(s, default_params(s), &A);
  QMatrix expected(2);
  expected(0, 1) = QScalar(1);
  expected(1, 0) = QScalar::q_power(-2);
  ASSERT_EQ(A, expected);
  ASSERT_EQ(ss.mixed.size(), 1u);
  ASSERT_TRUE(ss.mixed[0].c_solved.has_value());
  EXPECT_EQ(*ss.mixed[0].c_solved, QScalar::q_power(-1));
  EXPECT_EQ(ss.mixed[0].verdict, "match");
}

TEST(SolveMixture, Errors) {
  const QMatrix Z(2);
  const QMatrix I = QMatrix::identity(2);
  EXPECT_THROW(solve_mixture(Z, Z, I), Underdetermined);
  EXPECT_THROW(solve_mixture(unit<QScalar>(2, 1, 2), Z, unit<QScalar>(2, 1, 1)), Inconsistent);
  // u and v not proportional
  EXPECT_THROW(solve_mixture(unit<QScalar>(2, 1, 2), unit<QScalar>(2, 1, 2) * QScalar(2) + unit<QScalar>(2, 2, 1),
                             unit<QScalar>(2, 1, 1)),
               Inconsistent);
}

TEST(Stabilizer, DeskCases) {
  for (const auto& s : desk_cases()) {
    QMatrix A;
    const StabilizerSet ss = stabilizer(s, default_params(s), &A);
    for (const auto& r : check_stabilizer(ss, A)) EXPECT_TRUE(r.pass) << s.id() << " " << r.name << " " << r.detail;
    for (const auto& g : ss.mixed) EXPECT_NE(g.verdict, "mismatch") << s.id();
  }
}

TEST(Stabilizer, FormulasOnRandomParameters) {
  std::mt19937 rng(314159);
  for (const auto& s : enumerate_cases(9)) {
    for (int t = 0; t < 3; ++t) {
      const PointParams p = random_params(s, rng);
      QMatrix A;
      const StabilizerSet ss = stabilizer(s, p, &A);
      for (const auto& g : ss.mixed) {
        ASSERT_TRUE(g.c_solved.has_value()) << s.id() << " " << g.solve_error;
        if (g.tabulated.value) EXPECT_EQ(*g.tabulated.value, *g.c_solved) << s.id() << " a" << g.alpha;
        if (g.tabulated.candidate) EXPECT_EQ(*g.tabulated.candidate, *g.c_solved) << s.id() << " a" << g.alpha;
        EXPECT_EQ(g.X * A, A * g.X) << s.id();
      }
    }
  }
}

TEST(Stabilizer, SignIndependentCoefficients) {
  for (const auto& s : desk_cases()) {
    if (s.sign != 1) continue;
    const ClassSpec neg = ClassSpec::make(s.lie, s.family, s.m, -1);
    const auto a = stabilizer(s, default_params(s));
    const auto b = stabilizer(neg, default_params(neg));
    ASSERT_EQ(a.mixed.size(), b.mixed.size());
    for (std::size_t k = 0; k < a.mixed.size(); ++k) EXPECT_EQ(*a.mixed[k].c_solved, *b.mixed[k].c_solved) << s.id();
  }
}

TEST(Stabilizer, PerturbedCoefficientBreaksCommutation) {
  for (const auto& s : desk_cases()) {
    QMatrix A;
    const StabilizerSet ss = stabilizer(s, default_params(s), &A);
    const NaturalRep& rep = natural_rep(s.lie);
    for (const auto& g : ss.mixed) {
      const QMatrix base = g.cartan * rep.e[static_cast<std::size_t>(g.alpha - 1)];
      const QMatrix X = base + g.F_tilde * (*g.c_solved * QScalar::q());
      EXPECT_NE(X * A, A * X) << s.id() << " a" << g.alpha;
    }
  }
}

TEST(Stabilizer, LeviCountsFollowPiL) {
  const auto s = make("sp", 8, Family::T2, 2);
  const StabilizerSet ss = stabilizer(s, default_params(s));
  // Pi_l = {a1, a3, a4}
  EXPECT_EQ(ss.l_generators.size(), 12u);
  EXPECT_EQ(ss.mixed.size(), 1u);
  EXPECT_EQ(ss.cartan_generators.size(), 2u);
}

// on the default branch z_n = i q^{1-n}, so z_n / z_{n-2} = i / (q^{n-1} z_{n-2})
TEST(Stabilizer, OddDFormulaOnDefaultBranch) {
  for (int N : {6, 10}) {
    const int n = N / 2;
    const auto spec = ClassSpec::make(LieSeries::from_algebra("so", N), Family::T4, 0, 1);
    const PointParams p = default_params(spec);
    const QScalar literal = QScalar::i() / (QScalar::q_power(n - 1) * p.values.at(n - 2));
    EXPECT_EQ(*mixture_formula(spec, n - 1, p).value, literal) << N;
    EXPECT_EQ(*mixture_formula(spec, n, p).value, -literal) << N;
  }
}
