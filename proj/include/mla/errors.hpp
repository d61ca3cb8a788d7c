#pragma once

#include <stdexcept>
#include <string>

namespace mla {

/// Base class of everything the library throws on bad input or exhausted limits.
class MlaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables with the wrong shape, out-of-range entries, mismatched carriers.
class StructuralError : public MlaError {
 public:
  using MlaError::MlaError;
};

/// A configured size cap would be exceeded by an exhaustive computation.
class SizeLimitError : public MlaError {
 public:
  using MlaError::MlaError;
};

/// Raised when a computation contradicts a result that is supposed to hold for
/// every valid input (for example an s-triple that is not a cocycle). These
/// are surfaced as red-alert findings by the CLI.
class InvariantViolation : public MlaError {
 public:
  using MlaError::MlaError;
};

}  // namespace mla
