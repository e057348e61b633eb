#pragma once

#include <stdexcept>
#include <string>

namespace sds {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's JSON error lines.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed or out-of-range input: bad indices, dimension mismatch,
/// non-permutations, invalid bitstrings, precondition violations.
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_input"; }
};

/// An enumeration or search would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget_exceeded"; }
};

/// Two construction rules assigned different values to the same input.
class PrescriptionConflict : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "prescription_conflict"; }
};

}  // namespace sds
