#pragma once

#include <stdexcept>
#include <string>

namespace tatecoh {

/// Malformed or inconsistent input: bad tables, invalid modules, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that would exceed a configured cap or window.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tatecoh
