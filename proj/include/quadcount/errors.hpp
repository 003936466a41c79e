#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcount {

// Base for all library errors. Subclasses map 1:1 onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user-supplied argument value (probability out of range, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation's precondition on graph structure was violated (e.g. asking
// for edge scalars of a non-edge).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Internal cross-check failed: parity, divisibility, symmetry or a negative
// count where none is possible on valid input. Signals corrupted state.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A size guard tripped (enumeration budget, count overflow at load).
class SizeError : public Error {
 public:
  using Error::Error;
};

// A phase plan failed validation before execution.
class PlanError : public Error {
 public:
  using Error::Error;
};

// File could not be opened/read/written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace quadcount
