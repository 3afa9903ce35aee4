#pragma once

#include <stdexcept>
#include <string>

namespace dyndeg {

/// Precondition or input validation failure (bad ranges, malformed maps).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A fibration-specific operation was requested on a map or space without a
/// valid fibration.
class FibrationError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// Failure inside a computation on valid input (root finder did not
/// converge, a size cap was exceeded, ...).
class ComputationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Composition produced an identically zero component tuple.
class DegenerateComposition : public ComputationError {
  public:
    using ComputationError::ComputationError;
};

} // namespace dyndeg
