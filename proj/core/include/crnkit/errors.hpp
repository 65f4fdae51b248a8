#pragma once

#include <stdexcept>
#include <string>

namespace crnkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad file, bad binding, bad partition).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax or validation error in a network description, tagged with its line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

/// The request is well formed but outside what the analysis supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Floating point evaluation or integration failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A power with a non-integer exponent was requested at a nonpositive base.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A concentration fell below the positivity floor during integration.
class BoundaryError : public NumericalError {
 public:
  BoundaryError(std::string species, double time)
      : NumericalError("concentration of " + species + " hit the positivity floor at t = " + std::to_string(time)),
        species_(std::move(species)) {}

  [[nodiscard]] const std::string& species() const noexcept { return species_; }

 private:
  std::string species_;
};

/// The adaptive step size underflowed.
class StiffnessError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Subnetwork steady-state sets have no common point.
class EmptyIntersectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace crnkit
