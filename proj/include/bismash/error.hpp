#pragma once

#include <stdexcept>
#include <string>

namespace bismash {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cycle text, degree mismatch, non-member elements,
/// requests outside the configured enumeration bound.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A stabilizer whose irreducible characters the library cannot produce
/// (anything other than trivial, cyclic, or full symmetric on its support).
class UnsupportedStabilizer : public Error {
 public:
  explicit UnsupportedStabilizer(const std::string& what)
      : Error("E_UNSUPPORTED_STABILIZER: " + what) {}
};

/// An identity that must hold by theory failed. Always signals a bug or a
/// corrupted input table.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bismash
