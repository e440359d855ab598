#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// Violated documented precondition of an operation.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A quantity that must round to an integer (or an internal consistency
// residual) exceeded the configured tolerance.
class residual_error : public std::runtime_error {
 public:
  explicit residual_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace verlinde
