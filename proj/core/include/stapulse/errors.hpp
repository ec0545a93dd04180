#pragma once

#include <stdexcept>

namespace stapulse {

// Bad arguments, inconsistent configs, unmet preconditions. The CLI maps
// this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure while integrating (norm drift beyond tolerance, step
// mismatch). The CLI maps this to exit code 3.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stapulse
