#pragma once

#include <stdexcept>
#include <string>

namespace ufourier {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: violated preconditions, malformed input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computed size (frequency, Fejer order, depth) would exceed a configured cap.
class QuotaError : public Error {
 public:
  using Error::Error;
};

// A ternary prefix is too short to resolve the requested Cantor stage.
class PrefixTooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace ufourier
