#pragma once

#include <stdexcept>
#include <string>

namespace primroot {

/// Raised when a caller violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal invariant breaks. Never expected in practice.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace primroot
