/*
  Domain error hierarchy. Every throwing operation documents which of
  these it raises; the CLI maps categories to distinct exit codes.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// base for all recoverable domain failures
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad user input: file syntax, indices out of range
struct ParseError : DomainError {
  using DomainError::DomainError;
};
struct IndexOutOfRange : DomainError {
  using DomainError::DomainError;
};

// violated preconditions on geometric inputs
struct ValidationError : DomainError {
  using DomainError::DomainError;
};
struct ZeroVector : ValidationError {
  using ValidationError::ValidationError;
};
struct NotFullDimensional : ValidationError {
  using ValidationError::ValidationError;
};
struct NotReflexive : ValidationError {
  using ValidationError::ValidationError;
};
struct EmptyFace : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct WrongDimension : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidPartition : ValidationError {
  using ValidationError::ValidationError;
};
struct NotNef : ValidationError {
  using ValidationError::ValidationError;
};
struct NonLatticeDual : ValidationError {
  using ValidationError::ValidationError;
};
struct NotComparable : ValidationError {
  using ValidationError::ValidationError;
};
struct Decomposable : ValidationError {
  using ValidationError::ValidationError;
};
struct AmpleConditionViolated : ValidationError {
  using ValidationError::ValidationError;
};

// internal consistency failures: these signal a bug or an impossible input,
// not a user mistake
struct ConsistencyError : DomainError {
  using DomainError::DomainError;
};
struct NotPolynomial : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};
struct MalformedE : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};
struct RelationViolated : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};
struct CrossCheckFailed : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};

}  // namespace hodge
