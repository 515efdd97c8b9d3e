#pragma once

#include <stdexcept>
#include <string>

namespace multibubble {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation at a singular point (e.g. G(x,x)).
struct SingularityError : DomainError {
  using DomainError::DomainError;
};

// A finite result exceeds the double range; raised instead of returning inf.
struct OverflowError : Error {
  using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

// The stationary lambda-profile is not defined at the requested t.
struct ProfileError : Error {
  using Error::Error;
};

// Root finding was asked to refine an interval without a sign change.
struct BracketError : Error {
  using Error::Error;
};

// An iterative method hit its iteration cap.
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace multibubble
