#pragma once

#include <stdexcept>
#include <string>

namespace qtvsim {

// Root of the library's error hierarchy. Everything thrown on purpose
// derives from this, so callers can catch qtvsim::Error and know the
// failure was a violated contract rather than a bug in Eigen or the STL.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A dimension argument (vector length, subsystem size, sample count)
// is zero, negative, or inconsistent with its companions.
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

// A matrix or vector has the wrong shape for the operation.
class InvalidShapeError : public Error {
 public:
  using Error::Error;
};

// A numeric precondition failed: non-Hermitian input, trace away from 1,
// unnormalized state, weights off the simplex, parameter out of range.
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

// An iterative routine ran out of iterations. Carries the last residual
// so callers can decide whether the almost-answer is usable.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// A mask is not binary, not square, or has an empty diagonal.
class InvalidMaskError : public Error {
 public:
  using Error::Error;
};

// An agent or component index is out of range.
class InvalidIndexError : public Error {
 public:
  using Error::Error;
};

// A run configuration has unknown keys, missing keys, or out-of-range values.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (config lines, CSV cells). Carries a 1-based
// line and column so the CLI can point at the offending spot.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qtvsim
