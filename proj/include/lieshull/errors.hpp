#pragma once

#include <stdexcept>
#include <string>

namespace lieshull {

/// Malformed or inconsistent input (shape mismatch, bad JSON, non-ideal quotient).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed computation that could not be completed (log residual too
/// large, non-commuting generators where commutation is required, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's mathematical precondition does not hold (non-nilpotent input
/// to nilpotent_exp, non-unipotent Ad for the density tests, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lieshull
