#pragma once

#include <stdexcept>
#include <string>

namespace rainbowlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: graph6, JSON, matrix literals.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A size parameter exceeds a configured cap (vertex count, census n, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An identity that must hold on valid input did not. Indicates a bug.
class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbowlab
