#pragma once

#include <stdexcept>
#include <string>

namespace mms {

/// Input violates a documented precondition (bad parameter, malformed space, mass mismatch).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured work budget (point count, enumeration size, pivot count) was exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mms
