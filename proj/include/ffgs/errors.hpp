#pragma once

#include <stdexcept>
#include <string>

namespace ffgs {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: malformed data, violated precondition, failed validation.
struct ValidationError : Error {
  using Error::Error;
};

// Could not read or parse a document.
struct ParseError : Error {
  using Error::Error;
};

// An iteration guard tripped before a fixpoint was reached.
struct NonTerminating : Error {
  using Error::Error;
};

// A condition the underlying theory guarantees failed to hold.  Seeing this
// means the implementation is wrong, not the input.
struct InternalContradiction : Error {
  using Error::Error;
};

struct UnitInIdeal : ValidationError {
  using ValidationError::ValidationError;
};

struct NotAClosedImmersion : ValidationError {
  using ValidationError::ValidationError;
};

struct NotSplit : ValidationError {
  using ValidationError::ValidationError;
};

// The open-closed gluing of a quasi-finite result could not be certified.
struct GluingObstruction : Error {
  using Error::Error;
};

struct LocationError : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace ffgs
