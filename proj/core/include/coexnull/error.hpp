#pragma once

#include <stdexcept>
#include <string>

namespace coexnull {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or configuration value was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested beam/null configuration cannot be realized by the array
/// (too many constraints, or a numerically singular constraint set).
class InfeasibleConfiguration : public Error {
 public:
  using Error::Error;
};

}  // namespace coexnull
