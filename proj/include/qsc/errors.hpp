#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// The reduced denominator vanishes at q = 1.
class PoleAtOne : public Error {
 public:
  PoleAtOne() : Error("pole at q = 1") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A linear solve has no solution.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// A linear solve has more than one solution.
class Underdetermined : public Error {
 public:
  using Error::Error;
};

}  // namespace qsc
