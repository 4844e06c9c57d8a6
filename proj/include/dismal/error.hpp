#pragma once

#include <stdexcept>
#include <string>

namespace dismal {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (numbers, expressions, b-files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands of a binary operation carry different bases.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (d(0), l < 3, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured work or memory budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A dismal number does not fit the requested machine integer.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace dismal
