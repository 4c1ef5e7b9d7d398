#pragma once
// Dense square-or-rectangular matrices over an exact field. Storage is dense;
// multiplication skips zero entries, which is where all the time goes for the
// sparse R-matrices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/scalar.hpp"

namespace qsc {

/// Position and both values of the first entry where two matrices differ.
template <class T>
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  T lhs;
  T rhs;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit Matrix(std::size_t n) : Matrix(n, n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    }
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) {
      if (!x.is_zero()) x *= s;
    }
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) {
      if (!x.is_zero()) x = -x;
    }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    const auto b_rows = b.row_support();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : b_rows[k]) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Column indices of nonzero entries, per row.
  std::vector<std::vector<std::size_t>> row_support() const {
    std::vector<std::vector<std::size_t>> s(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!(*this)(r, c).is_zero()) s[r].push_back(c);
      }
    }
    return s;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += x.is_zero() ? 0 : 1;
    return n;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  T trace() const {
    T s;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<QScalar>;
using CMatrix = Matrix<GaussRational>;

/// Kronecker product: (a⊗b)[(i,k),(j,l)] = a[i,j] b[k,l].
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto b_rows = b.row_support();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l : b_rows[k]) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

template <class T>
std::optional<Mismatch<T>> first_difference(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes differ");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) return Mismatch<T>{r, c, a(r, c), b(r, c)};
    }
  }
  return std::nullopt;
}

/// Row-reduces a copy in place; returns the rank.
template <class T>
std::size_t rank(Matrix<T> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    }
    const T inv = m(rank, c).inverse();
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      const T factor = m(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(rank, k).is_zero()) m(r, k) -= factor * m(rank, k);
      }
    }
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse. Throws SingularMatrix.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix();
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m(pivot, k), m(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    const T p = m(c, c).inverse();
    for (std::size_t k = 0; k < n; ++k) {
      if (!m(c, k).is_zero()) m(c, k) *= p;
      if (!inv(c, k).is_zero()) inv(c, k) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const T factor = m(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        if (!m(c, k).is_zero()) m(r, k) -= factor * m(c, k);
        if (!inv(c, k).is_zero()) inv(r, k) -= factor * inv(c, k);
      }
    }
  }
  return inv;
}

/// Entry-wise q := 1.
inline CMatrix eval_at_one(const QMatrix& m) {
  return m.map([](const QScalar& x) { return x.eval_at_one(); });
}

inline QMatrix to_qmatrix(const CMatrix& m) {
  return m.map([](const GaussRational& x) { return QScalar(x); });
}

/// Unit matrix e_{ij} with 1-based indices.
template <class T>
Matrix<T> unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<T> m(n, n);
  m(i - 1, j - 1) = T(1);
  return m;
}

}  // namespace qsc
