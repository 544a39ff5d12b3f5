#pragma once

#include <stdexcept>
#include <string>

namespace qp {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: unknown labels, unparsable specs. The CLI maps
// these to exit code 1.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// A documented precondition or invariant was violated. The CLI maps these
// to exit code 2; the message names the violated condition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

class InvalidTypeError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NoSuchClassError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class QuadraticityError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotUnipotentError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class FieldMismatchError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class QueryInvalidError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

} // namespace qp
