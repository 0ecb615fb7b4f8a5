#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lndfilt {

// Base of every failure raised by the library. Subclasses map one-to-one
// onto the command-line exit codes (see tools/session.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// An input violates the documented precondition of an operation
// (parameter out of range, zero input where nonzero required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A derivation does not pass to the quotient ring.
class NotWellDefined : public PreconditionError {
 public:
  NotWellDefined(const std::string& what, std::string relation)
      : PreconditionError(what), relation_(std::move(relation)) {}
  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string relation_;
};

// The configurable reduction-step budget ran out before a Groebner
// computation finished. Never converted into a (possibly wrong) answer.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// Iterating a derivation did not reach zero within the requested bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lndfilt
