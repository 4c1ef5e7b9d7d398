#pragma once
// Exact scalars: the field Q(i)(q) of rational functions in q over the
// Gaussian rationals. Everything else in the library is a matrix over this.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

using Rational = mpq_class;

/// re + im*i with exact rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Literal in the scalar grammar, e.g. "3/2", "-i", "(1 + 2*i)".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

/// Finite sum of c_k q^k, k in Z. Stored densely from the lowest exponent;
/// the first and last stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const GaussRational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(GaussRational(constant)) {}  // NOLINT

  static LaurentPoly monomial(const GaussRational& coefficient, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }
  static LaurentPoly from_terms(const std::map<int, GaussRational>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  std::size_t term_count() const;

  /// Valid only when nonzero.
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const GaussRational& low_coefficient() const { return coeffs_.front(); }
  const GaussRational& high_coefficient() const { return coeffs_.back(); }
  GaussRational coefficient(int exponent) const;
  std::map<int, GaussRational> terms() const;

  LaurentPoly shifted(int by) const;
  GaussRational eval_at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussRational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussRational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Ordinary polynomial division; both operands must have low_degree() >= 0.
  /// Returns quotient, sets remainder.
  static LaurentPoly divide(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& remainder);
  /// Monic gcd of two polynomials (low degree >= 0); gcd(0, 0) = 0.
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<GaussRational> coeffs_;
};

/// Reduced fraction numerator/denominator of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with constant
/// term 1 (any power of q lives in the numerator) and is coprime to the
/// numerator. Zero is 0/1. With this form equality is structural.
class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  QScalar(const GaussRational& value) : num_(value), den_(1) {}  // NOLINT
  QScalar(LaurentPoly value) : num_(std::move(value)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero when den is zero.
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar q() { return LaurentPoly::q_power(1); }
  static QScalar q_power(int exponent) { return LaurentPoly::q_power(exponent); }
  static QScalar i() { return GaussRational::i(); }

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const noexcept { return den_.is_one(); }

  QScalar inverse() const;
  QScalar pow(int exponent) const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitutes q := 1. Throws PoleAtOne if the reduced denominator vanishes there.
  GaussRational eval_at_one() const;

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& x);

/// [z]_q = (q^z - q^-z) / (q - q^-1), as a Laurent polynomial.
QScalar q_integer(int z);

/// Parses the scalar literal grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ['-'] atom ['^' ['-'] digits]
///   atom   := digits | 'i' | 'q' | '(' expr ')'
/// A leading '-' binds looser than '^', so "-q^2" is -(q^2). Whitespace is ignored.
QScalar parse_scalar(std::string_view text);

}  // namespace qsc
