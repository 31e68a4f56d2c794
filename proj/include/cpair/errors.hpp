#pragma once

#include <stdexcept>
#include <string>

namespace cpair {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or dimensionally inconsistent input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Document could not be parsed. `location` is a JSON pointer (or empty).
class ParseError : public InputError {
 public:
  ParseError(std::string location, const std::string& message)
      : InputError(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// A differential was applied to a cochain of the wrong bidegree.
class WrongDifferentialError : public Error {
 public:
  using Error::Error;
};

/// Gerstenhaber composition requested on cochains that cannot be composed.
class NotComposableError : public Error {
 public:
  using Error::Error;
};

/// The deformation has no (n-)infinitesimal.
class NoInfinitesimalError : public Error {
 public:
  using Error::Error;
};

/// Operation refused because the deformation does not satisfy its equations.
class InvalidDeformationError : public Error {
 public:
  using Error::Error;
};

/// Requested degree exceeds the configured cap.
class DegreeCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpair
