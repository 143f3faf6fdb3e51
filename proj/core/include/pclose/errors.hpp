#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cycle syntax, non-bijective image list, bad spec file.
struct ParseError : Error {
  using Error::Error;
};

/// Arguments violate an operation precondition (degree mismatch, not a
/// subgroup, target not inside the actor group, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// A configured resource bound was exceeded (oracle bound, quotient degree
/// cap, element-enumeration limit).
struct ResourceError : Error {
  using Error::Error;
};

/// Internal consistency check failed. Indicates a bug; never swallowed.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace cgt
