#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mckay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic misuse: division by zero, conductor mismatch, bad embedding.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Shapes or dimensions that do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an object that does not satisfy its
/// precondition (e.g. a symplectic-only check on a non-symplectic group).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A closure or order search ran past its configured limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}

  /// Number of elements (or powers) produced before giving up.
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

/// An internal cross-check failed. Seeing one of these means either an
/// arithmetic bug or a counterexample to a theorem; both deserve attention.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed group-spec input. `where()` names the offending location.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& message)
      : Error(where + ": " + message), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace mckay
