#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

/// Raised when a result cannot be certified at the working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-posed computation whose mathematical outcome is a failure
/// (no qualifying order in a window, a violated relation, ...).
class MathFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nonarch
