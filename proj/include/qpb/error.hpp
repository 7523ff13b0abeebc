#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

// Base for all engine errors. Axiom failures are not errors; they are
// recorded in a Report. Errors signal unusable input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wrong table shape, index out of range, incompatible operands.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A requested operation needs data the input does not provide.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A dense table would exceed the configured entry cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Input violates an algebraic precondition of the operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpb
