#pragma once

#include <stdexcept>
#include <string>

namespace focal {

/// Raised when an argument violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when an exhaustive computation would exceed its size limits.
class GuardRailError : public std::runtime_error {
public:
  explicit GuardRailError(const std::string &what) : std::runtime_error(what) {}
};

/// Raised when a computed report breaks an ordering that must always hold.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string &what) : std::logic_error(what) {}
};

} // namespace focal
