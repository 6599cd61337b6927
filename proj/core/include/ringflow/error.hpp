#pragma once

#include <stdexcept>
#include <string>

namespace ringflow {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad parameter, shape mismatch,
/// malformed file). The command-line front end maps this to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A well-posed computation did not produce a certified answer.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Requested problem size cannot be allocated.
class ResourceError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace ringflow
