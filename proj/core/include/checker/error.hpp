#pragma once

#include <stdexcept>
#include <string>

namespace checker {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad JSON, non-bijective images, mismatched labels.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The shifted products K[a]·p·Θ_j[b]·q·K[c] did not agree at consecutive j.
class StabilizationFailure : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace checker
