#pragma once

#include <stdexcept>

namespace atsim {

/// Base for configuration/physics faults as opposed to malformed arguments.
/// The CLI maps these to exit code 3; std::invalid_argument stays the idiom
/// for programming errors and bad raw arguments.
class PhysicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A level configuration that cannot form the working excitation scheme.
class SchemeError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// Green function or self-energy requested exactly at one of its poles.
class PoleEvaluationError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// Propagated pulse ran into the edge of its time window.
class WindowTooSmallError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// A bracketed search that found nothing (e.g. no interior minimum).
class NotFoundError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

}  // namespace atsim
