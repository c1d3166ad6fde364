#pragma once

#include <stdexcept>
#include <string>

namespace pcop {

// Input errors map to CLI exit code 2, numerical failures to exit code 3.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
  public:
    using Error::Error;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. p not in (0,1)).
class DomainError : public InputError {
  public:
    using InputError::InputError;
};

/// Parameter record violates a type invariant.
class InvalidParameters : public InputError {
  public:
    using InputError::InputError;
};

/// Option price outside no-arbitrage bounds.
class OutOfBounds : public InputError {
  public:
    using InputError::InputError;
};

class MaturityMismatch : public InputError {
  public:
    using InputError::InputError;
};

class NonConvergence : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class NoBracket : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class NormalizerOutOfBand : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class Degenerate : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class SeedInvalid : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class NegativeVariance : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

}  // namespace pcop
