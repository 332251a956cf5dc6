#pragma once

#include <stdexcept>
#include <string>

namespace twostate {

/// Raised when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a quadrature or optimizer cannot meet its tolerance.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
void require_finite(double value, const char* name);
}  // namespace detail

}  // namespace twostate
