#pragma once

#include <stdexcept>
#include <string>

namespace waringlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (bad degree, mismatched
/// ambient spaces, a hypothesis that does not hold for the input).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (forms, point files, curve files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A random draw landed on a special position; the caller should resample.
class DegenerateDraw : public Error {
 public:
  using Error::Error;
};

}  // namespace waringlab
