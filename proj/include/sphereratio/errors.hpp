#pragma once

#include <stdexcept>
#include <string>

namespace sphereratio {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Shortest-path request for (nearly) antipodal endpoints: the geodesic is
/// not unique and an orientation witness is required instead.
struct AntipodalPair : DomainError {
  using DomainError::DomainError;
};

/// Convexity query at a vertex whose adjacent edge is a half great circle or
/// longer; the local wedge is not defined there.
struct AntipodalNeighbors : DomainError {
  using DomainError::DomainError;
};

/// Empty or otherwise unusable point set.
struct DegenerateInput : DomainError {
  using DomainError::DomainError;
};

/// Curve that cannot be normalized (all vertices coincide, exact
/// back-tracking at a vertex outside {0, 1, inf}, ...).
struct DegenerateCurve : DomainError {
  using DomainError::DomainError;
};

/// Curve meets the reference ray tangentially within tolerance; the crossing
/// structure cannot be resolved.
struct NonTransversal : Error {
  using Error::Error;
};

/// Adaptive refinement exhausted its evaluation budget before reaching the
/// requested tolerance.
struct ToleranceNotMet : Error {
  using Error::Error;
};

/// Map derivative (or value) evaluated to NaN/Inf away from a declared
/// breakpoint.
struct NonFiniteDerivative : Error {
  using Error::Error;
};

/// Sampling found the map within 1e-9 of an omitted value {0, 1, inf}.
struct OmittedValueViolation : Error {
  using Error::Error;
};

/// A measured precondition of a verification check failed.
struct PreconditionFail : Error {
  using Error::Error;
};

}  // namespace sphereratio
