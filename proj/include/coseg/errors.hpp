#pragma once

#include <stdexcept>
#include <string>

namespace coseg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Reduction stalled: every remaining vertex has degree >= 3.
class NotPartialTwoTree : public Error {
 public:
  using Error::Error;
};

class MalformedTwoTree : public Error {
 public:
  using Error::Error;
};

// An auxiliary strip ray missed a required crossing at the current shrink level.
class StripFailure : public Error {
 public:
  using Error::Error;
};

class PlacementExhausted : public Error {
 public:
  using Error::Error;
};

class StructuralMismatch : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace coseg
