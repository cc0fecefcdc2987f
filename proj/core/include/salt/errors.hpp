#pragma once

#include <stdexcept>
#include <string>

namespace salt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operator applied outside its domain (e.g. Λ^s with s < 0 on a field with
/// nonzero mean, Riesz transform of a constant).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two fields that must share a grid do not.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Operation requested on the wrong model variant or dimension.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Input contains NaN or infinity.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace salt
