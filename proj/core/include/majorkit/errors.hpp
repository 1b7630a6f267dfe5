#pragma once

#include <stdexcept>
#include <string>

namespace majorkit {

// Base for every error raised by the library. Callers that only care about
// "the library rejected this" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong dimensions, non-finite entries, violated type
// invariants, out-of-range arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A precondition of the form "x majorizes y" did not hold.
class OrderViolation : public Error {
 public:
  using Error::Error;
};

// The exact algorithm would need an unreasonable state space; use the
// Monte Carlo path instead.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Singular or otherwise numerically unusable linear system.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A simulation exceeded its hard step cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace majorkit
