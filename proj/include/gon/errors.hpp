#pragma once

#include <stdexcept>
#include <string>

namespace gon {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong ring, dimension mismatch, bad encoding.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis or operation precondition does not hold. The message
// names the violated condition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured ceiling.
class SearchLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A postcondition guaranteed by the mathematics failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gon
