#pragma once

#include <stdexcept>
#include <string>

namespace prc {

/// Malformed or inconsistent user input (model files, command-line values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (non-positive metric
/// coefficient, index outside the admissible set, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The model violates requirement 2 of the structural hypothesis, so the
/// obstruction numbers of some chain are undefined.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace prc
