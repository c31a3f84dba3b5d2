#pragma once

#include <stdexcept>
#include <string>

namespace dirosc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different symbol universes.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

// Differentiation with respect to a non-coordinate, or substitution of a
// coordinate.
class InvalidVariableError : public Error {
 public:
  using Error::Error;
};

class CyclicBindingError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Raising a contravariant vector or lowering a covariant one.
class VarianceError : public Error {
 public:
  using Error::Error;
};

// Chirality requested for a representation without a gamma5.
class NoChiralityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameters, non-Hermitian assembly, eigensolver failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace dirosc
