#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ronco {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DegreeOverflow : Error {
  using Error::Error;
};

struct NotALieElement : Error {
  using Error::Error;
};

struct NameError : Error {
  using Error::Error;
};

/// Parse failure; `position` is the 1-based character offset of the offending token.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Input violates a structural precondition (not Leibniz, not Lie, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Raised when a chain-complex property fails; always an internal bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace ronco
