#pragma once

#include <stdexcept>
#include <string>

namespace fri {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range values, ragged matrices, dimension or index
// mismatches.
class InputError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an argument that violates its precondition,
// e.g. a delta computation on a point that is not a solution.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// The inequality system (or one of its rows) has no solution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A configured resource bound (grid cap, permutation sweep size) would be
// exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A state that the underlying theory rules out was reached.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fri
