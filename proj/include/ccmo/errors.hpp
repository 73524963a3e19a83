#pragma once

#include <stdexcept>

namespace ccmo {

// Malformed input; messages carry the offending line number where one exists.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a domain invariant (mu_i >= 1, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccmo
