#ifndef GPOT_ERRORS_HPP
#define GPOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpot {

// Base of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments, malformed files, inconsistent configuration. CLI exit code 2.
struct InvalidInput : Error {
  using Error::Error;
};

// Numerical failure on otherwise well-formed input. CLI exit code 3.
struct NumericalError : Error {
  using Error::Error;
};

struct InvalidMatrix : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DimMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct EmptyInput : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidEpsilon : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InsufficientSamples : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct GridMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidConfig : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct MissingParameter : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NonPositiveData : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct NotPsd : NumericalError {
  using NumericalError::NumericalError;
};
struct NumericalInconsistency : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace gpot

#endif
