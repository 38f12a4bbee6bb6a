#pragma once

#include <stdexcept>
#include <string>

namespace gdeutsch {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request would exceed a configured resource cap
/// (e.g. enumerating more functions than the enumeration cap allows).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a quantity is mathematically undefined for the given input,
/// such as a posterior whose evidence is zero.
class DegenerateResult : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gdeutsch
