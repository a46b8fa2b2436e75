#pragma once

#include <stdexcept>
#include <string>

namespace sfg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (bad vertex id, malformed constraint, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Request is well-formed but exceeds a configured size, time or memory budget.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression was evaluated outside its validity range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (edge lists, config files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfg
