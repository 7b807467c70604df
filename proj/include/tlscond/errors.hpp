#pragma once

#include <stdexcept>
#include <string>

namespace tlscond {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix entry is NaN or infinite.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// The TLS problem is nongeneric (sigma'_n - sigma_{n+1} at or below the
/// genericity threshold), so its solution is not unique or does not exist.
class NongenericError : public Error {
 public:
  using Error::Error;
};

/// The last component of the smallest right singular vector of [A, b] is zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A linear system that must be solved is singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// An iterative decomposition failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A dense oracle object would exceed the configured entry cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (matrix files, CLI specifications).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tlscond
