#pragma once

#include <stdexcept>
#include <string>

namespace smallcover {

/// The matrix fails the vertex nonsingularity condition.
class NotCharacteristic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs a factor-compatible small cover got another one.
class NotFactorCompatible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree, or a
/// theorem-backed identity failed. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration request beyond the supported size.
class GuardrailExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace smallcover
