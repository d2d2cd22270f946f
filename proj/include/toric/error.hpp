#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Malformed input file or command-line value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural requirement
/// (non-primitive ray, non-split lattice, incomplete fan, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition or internal consistency check failed.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toric
