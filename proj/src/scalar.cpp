#include "qsc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "qsc/errors.hpp"

namespace qsc {

// ---------------------------------------------------------------------------
// GaussRational
// ---------------------------------------------------------------------------

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0) return {Rational(1 / re_)};
  Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw DivisionByZero();
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string rational_literal(const Rational& r) { return r.get_str(); }

}  // namespace

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return rational_literal(re_);
  std::string imag;
  Rational abs_im = abs(im_);
  imag = abs_im == 1 ? "i" : rational_literal(abs_im) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return "(" + rational_literal(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(const GaussRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const GaussRational& coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient.is_zero()) return p;
  p.low_ = exponent;
  p.coeffs_.push_back(coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, GaussRational>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const GaussRational& c) { return !c.is_zero(); }));
}

GaussRational LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, GaussRational> LaurentPoly::terms() const {
  std::map<int, GaussRational> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.emplace(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

void LaurentPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const GaussRational& c) { return !c.is_zero(); });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const GaussRational& c) { return !c.is_zero(); });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

GaussRational LaurentPoly::eval_at_one() const {
  GaussRational sum;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), GaussRational());
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussRational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::divide(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& remainder) {
  if (den.is_zero()) throw DivisionByZero();
  remainder = num;
  LaurentPoly quotient;
  const int den_deg = den.high_degree();
  const GaussRational lead_inv = den.high_coefficient().inverse();
  while (!remainder.is_zero() && remainder.high_degree() >= den_deg) {
    LaurentPoly step = monomial(remainder.high_coefficient() * lead_inv, remainder.high_degree() - den_deg);
    quotient += step;
    remainder -= step * den;
  }
  return quotient;
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r;
    divide(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.high_coefficient().inverse();
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high_degree(); e >= low_; --e) {
    const GaussRational& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c.is_zero()) continue;
    std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    // Pull a sign out of purely real or purely imaginary coefficients.
    bool negative = false;
    std::string mag;
    if (c.is_real() || sgn(c.re()) == 0) {
      const Rational& part = c.is_real() ? c.re() : c.im();
      negative = sgn(part) < 0;
      Rational a = abs(part);
      if (c.is_real()) {
        mag = (a == 1 && !mono.empty()) ? "" : rational_literal(a);
      } else {
        mag = a == 1 ? "i" : rational_literal(a) + "*i";
      }
    } else {
      mag = c.to_string();
    }
    std::string term = mag;
    if (!mono.empty()) term = term.empty() ? mono : term + "*" + mono;
    if (first) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// QScalar
// ---------------------------------------------------------------------------

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QScalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.low_degree() != 0) {
    const int k = den_.low_degree();
    den_ = den_.shifted(-k);
    num_ = num_.shifted(-k);
  }
  if (den_.high_degree() > 0) {
    const int nk = num_.low_degree();
    LaurentPoly g = LaurentPoly::gcd(num_.shifted(-nk), den_);
    if (g.high_degree() > 0) {
      LaurentPoly r;
      num_ = LaurentPoly::divide(num_.shifted(-nk), g, r).shifted(nk);
      den_ = LaurentPoly::divide(den_, g, r);
    }
  }
  const GaussRational c = den_.low_coefficient();
  if (!c.is_one()) {
    const GaussRational inv = c.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {den_, num_};
}

QScalar QScalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QScalar result(1);
  QScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QScalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  if (o.den_.is_one() && o.num_.is_monomial()) {
    // Dividing by c q^k keeps the denominator untouched.
    num_ = num_.shifted(-o.num_.low_degree()) * o.num_.low_coefficient().inverse();
    return *this;
  }
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

GaussRational QScalar::eval_at_one() const {
  const GaussRational d = den_.eval_at_one();
  if (d.is_zero()) throw PoleAtOne();
  return num_.eval_at_one() / d;
}

std::string QScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << x.to_string(); }

QScalar q_integer(int z) {
  if (z == 0) return {};
  if (z < 0) return -q_integer(-z);
  LaurentPoly p;
  for (int k = 0; k < z; ++k) p += LaurentPoly::q_power(z - 1 - 2 * k);
  return p;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  QScalar parse() {
    QScalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  QScalar expr() {
    QScalar value = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        value += term();
      } else if (c == '-') {
        ++pos_;
        value -= term();
      } else {
        return value;
      }
    }
  }

  QScalar term() {
    QScalar value = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value *= factor();
      } else if (c == '/') {
        ++pos_;
        QScalar divisor = factor();
        if (divisor.is_zero()) throw DivisionByZero();
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  QScalar factor() {
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    QScalar base = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg_exp = false;
      if (peek() == '-') {
        neg_exp = true;
        ++pos_;
      }
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent digits");
      long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 100000) fail("exponent too large");
        ++pos_;
      }
      int exponent = static_cast<int>(neg_exp ? -e : e);
      if (exponent < 0 && base.is_zero()) throw DivisionByZero();
      base = base.pow(exponent);
    }
    return negate ? -base : base;
  }

  QScalar atom() {
    char c = peek();
    if (c == 'q') {
      ++pos_;
      return QScalar::q();
    }
    if (c == 'i') {
      ++pos_;
      return QScalar::i();
    }
    if (c == '(') {
      ++pos_;
      QScalar inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return QScalar(GaussRational(Rational(n)));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace qsc
