#pragma once

#include <stdexcept>
#include <string>

namespace magicsq {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cell count does not match the declared order.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// The cells are not a permutation of 1..n^2.
class PrimitivityError : public Error {
 public:
  PrimitivityError(const std::string& what, int value)
      : Error(what), value_(value) {}
  int offending_value() const { return value_; }

 private:
  int value_ = 0;
};

// A construction was asked to run on the wrong parity class.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Order outside the domain an operation supports (zero, negative, odd, ...).
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

// A value or index argument outside its valid range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Order for which no magic square exists at all (n = 2).
class ImpossibleOrderError : public Error {
 public:
  using Error::Error;
};

// Order too large for exhaustive enumeration.
class InfeasibleOrderError : public Error {
 public:
  using Error::Error;
};

// An internal construction rule was violated; indicates rule drift, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; carries the offending position when known (1-based, 0 = unknown).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace magicsq
