#pragma once

#include <stdexcept>
#include <string>

namespace detsr {

/// Raised when an operation's precondition is violated (bad index, arity
/// mismatch, q != r*d, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed external input (tensor files, scalar strings).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace detsr
