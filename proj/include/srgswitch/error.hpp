#pragma once

#include <stdexcept>
#include <string>

namespace srgsw {

// Base of every library exception. The CLI maps the concrete type to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a documented constraint (bad family order, vertex out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the domain of the operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Parameters whose eigenvalues are irrational (conference type).
class UnsupportedSpectrum : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configured cap or budget would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (graph6 lines, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace srgsw
