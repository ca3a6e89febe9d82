#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace residua {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different polynomial rings") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAMember : public Error {
 public:
  using Error::Error;
};

class NotASubideal : public Error {
 public:
  NotASubideal() : Error("a not contained in I") {}
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact division that must succeed leaves a remainder.
class DivisionInexact : public Error {
 public:
  using Error::Error;
};

/// The Groebner engine exceeded its configured step budget.
class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(std::size_t steps)
      : Error("resource-limit: Groebner basis computation exceeded " +
              std::to_string(steps) + " steps") {}
};

/// Random general-element selection failed every retry.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// A hypothesis that is checked by computation does not hold.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse-error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& check)
      : Error("validation-error: " + check) {}
};

}  // namespace residua
