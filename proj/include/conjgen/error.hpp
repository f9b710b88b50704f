#pragma once

#include <stdexcept>
#include <string>

namespace conjgen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction was asked for with the wrong parity (k even/odd, c(A) even).
class ParityError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NoCircuit : public Error {
 public:
  using Error::Error;
};

/// An object failed its own invariant (mixed cycle types, non-bijection, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Convergence failure in an iterative numerical method.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A self-check inside the library failed; this always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace conjgen
