#include <gtest/gtest.h>

#include <random>

#include "qsc/errors.hpp"
#include "qsc/scalar.hpp"

using namespace qsc;

namespace {

QScalar q() { return QScalar::q(); }
QScalar P(const char* s) { return parse_scalar(s); }

// Random Laurent polynomial with small Gaussian integer coefficients.
QScalar random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-3, 3), len(1, 3);
  QScalar x;
  const int k = len(rng);
  for (int t = 0; t < k; ++t) x += QScalar(GaussRational(c(rng), c(rng))) * QScalar::q_power(e(rng));
  return x;
}

QScalar random_scalar(std::mt19937& rng) {
  QScalar d;
  while (d.is_zero()) d = random_laurent(rng);
  return random_laurent(rng) / d;
}

}  // namespace

TEST(GaussRational, Arithmetic) {
  const GaussRational a(Rational(1, 2), 3);
  const GaussRational b(2, -1);
  EXPECT_EQ(a * b, GaussRational(Rational(4), Rational(11, 2)));
  EXPECT_EQ(a * a.inverse(), GaussRational(1));
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_EQ(a.norm(), Rational(37, 4));
}

TEST(GaussRational, Literals) {
  EXPECT_EQ(GaussRational(Rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ((-GaussRational::i()).to_string(), "-i");
  EXPECT_EQ(GaussRational(1, 2).to_string(), "(1 + 2*i)");
}

TEST(LaurentPoly, DivisionAndGcd) {
  // (q^2 - 1) = (q - 1)(q + 1)
  const LaurentPoly a = LaurentPoly::from_terms({{2, 1}, {0, -1}});
  const LaurentPoly b = LaurentPoly::from_terms({{1, 1}, {0, -1}});
  LaurentPoly rem;
  const LaurentPoly quo = LaurentPoly::divide(a, b, rem);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo, LaurentPoly::from_terms({{1, 1}, {0, 1}}));
  EXPECT_EQ(LaurentPoly::gcd(a, b * GaussRational(5)), b);
  EXPECT_TRUE(LaurentPoly::gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST(QScalar, CancelsToQNumberInverse) {
  // (q - q^-1)/(q^2 - q^-2) = 1/(q + q^-1)
  const QScalar lhs = (q() - q().inverse()) / (q() * q() - q().pow(-2));
  const QScalar rhs = QScalar(1) / (q() + q().inverse());
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(rhs.to_string(), "(q)/(q^2 + 1)");
}

TEST(QScalar, QIntegers) {
  EXPECT_EQ(q_integer(3), P("q^2 + 1 + q^-2"));
  EXPECT_EQ(q_integer(0), QScalar(0));
  EXPECT_EQ(q_integer(-2), -q_integer(2));
  EXPECT_EQ(q_integer(1), QScalar(1));
  for (int z = 1; z < 8; ++z) EXPECT_EQ(q_integer(z).eval_at_one(), GaussRational(z));
}

TEST(QScalar, CanonicalDenominator) {
  const QScalar x = P("(3*q^4 + q^3)/(2*q^2 - 4*q^5)");
  const LaurentPoly& d = x.denominator();
  EXPECT_EQ(d.low_degree(), 0);
  EXPECT_TRUE(d.coefficient(0).is_one());
  EXPECT_EQ(x * P("(2*q^2 - 4*q^5)"), P("3*q^4 + q^3"));
}

TEST(QScalar, EvalAtOne) {
  EXPECT_EQ(P("(q^2 - 1)/(q - 1)").eval_at_one(), GaussRational(2));
  EXPECT_THROW(P("1/(q - 1)").eval_at_one(), PoleAtOne);
  EXPECT_EQ(P("i*q^-3").eval_at_one(), GaussRational::i());
}

TEST(QScalar, Errors) {
  EXPECT_THROW(P("1/0"), DivisionByZero);
  EXPECT_THROW(QScalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(P("q^"), ParseError);
  EXPECT_THROW(P("2 + "), ParseError);
  EXPECT_THROW(P("x"), ParseError);
  EXPECT_THROW(P("(q"), ParseError);
}

TEST(QScalar, ParserPrecedence) {
  EXPECT_EQ(P("-q^2"), -(q() * q()));
  EXPECT_EQ(P("2*q^-1 - 3/4"), QScalar(2) / q() - QScalar(GaussRational(Rational(3, 4))));
  EXPECT_EQ(P(" ( 1 + i ) ^ 2 "), QScalar(GaussRational(0, 2)));
  EXPECT_EQ(P("q^-2*q^2"), QScalar(1));
}

TEST(QScalarProperty, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(20261015);
  for (int t = 0; t < 200; ++t) {
    const QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, QScalar(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), QScalar(1));
  }
}

TEST(QScalarProperty, RenderParseRoundTrip) {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const QScalar a = random_scalar(rng);
    const std::string s = a.to_string();
    EXPECT_EQ(parse_scalar(s), a) << s;
    EXPECT_EQ(parse_scalar(s).to_string(), s);
  }
}

TEST(QScalarProperty, PowMatchesRepeatedProduct) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const QScalar a = random_scalar(rng);
    if (a.is_zero()) continue;
    QScalar p(1);
    for (int k = 0; k < 4; ++k) p *= a;
    EXPECT_EQ(a.pow(4), p);
    EXPECT_EQ(a.pow(-4) * p, QScalar(1));
  }
}
