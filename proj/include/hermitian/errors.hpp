#pragma once

#include <stdexcept>
#include <string>

namespace hermitian {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition (bad q, t out of range, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

class NotPrimePower : public ValidationError {
  public:
    explicit NotPrimePower(long long q)
        : ValidationError(std::to_string(q) + " is not a prime power") {}
};

class RangeError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Request lies outside what the toy-scale constructions can handle exactly.
class ScopeError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class DivisionByZero : public ValidationError {
  public:
    DivisionByZero() : ValidationError("division by zero in finite field") {}
};

class FieldMismatch : public ValidationError {
  public:
    FieldMismatch() : ValidationError("operands belong to different fields") {}
};

class WrongField : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ZeroCode : public ValidationError {
  public:
    ZeroCode() : ValidationError("code has dimension 0") {}
};

/// An enumeration would exceed its configured size guard.
class SizeGuard : public Error {
  public:
    using Error::Error;
};

/// A constructed object failed its own verification. Always a bug.
class AssertionFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace hermitian
