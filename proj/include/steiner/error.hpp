#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Domain-level failures: the input is well formed but outside the mathematical
// domain of the operation.  The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotBoundaryFormat : DomainError {
  using DomainError::DomainError;
};

struct DegenerateTensor : DomainError {
  using DomainError::DomainError;
};

struct NonMemberHyperplane : DomainError {
  using DomainError::DomainError;
};

struct NotNormalCrossing : DomainError {
  using DomainError::DomainError;
};

struct FieldMismatch : DomainError {
  using DomainError::DomainError;
};

struct SingularMatrix : DomainError {
  using DomainError::DomainError;
};

// Malformed input text or files.  The CLI maps these to exit code 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

}  // namespace steiner
