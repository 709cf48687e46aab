#pragma once

#include <stdexcept>
#include <string>

namespace symsig {

/// Bad user input: rejected parameters, mismatched groups, out-of-range characters.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must always hold was found broken. This is a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symsig
