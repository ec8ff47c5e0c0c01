#pragma once

#include <stdexcept>
#include <string>

namespace templeflow {

/// Raised when a state violates rho > 0 (vacuum is not supported).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed arguments: bad family index, empty sample sets, t <= 0, CFL violations.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver was asked to handle data that belongs to a different regime.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something the theory excludes happened anyway (negative discriminant,
/// non-positive density denominator, ...).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Initial data does not satisfy the hypotheses required by the solver.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The finite-volume scheme produced a non-positive density.
class BreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace templeflow
