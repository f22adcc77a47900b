#pragma once

#include <stdexcept>
#include <string>

namespace helix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract caller input (bad JSON, nonpositive rank, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematically undefined request: inverting zero, mixing radicands, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested value exists but no helix realizes it.
class NoHelixError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Shifting produced a nonpositive rank; the input seed does not extend.
class NonPositiveRankError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The operation is only defined in another regime (usually d > 2).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Reaching this is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace helix
