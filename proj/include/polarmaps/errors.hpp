#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarmaps {

/// Base class of every error raised by the library. The CLI maps each
/// subclass onto a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different numbers of variables, or an
/// operation is restricted to a particular ambient dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An integer parameter (s, k, p, exponent) is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (zero polynomial where a degree
/// is needed, inhomogeneous form, non-regular polar map, point off a curve).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The degree-k polar map has no value at the requested point: every k-th
/// partial derivative vanishes there.
class UndefinedMapError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A configured step or size limit was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Random genericity (slices, coordinate changes) could not be achieved
/// within the retry budget.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text failed to parse. `offset()` is the byte offset of the
/// offending token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace polarmaps
