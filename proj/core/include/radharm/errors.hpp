#pragma once

#include <stdexcept>
#include <string>

namespace radharm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the open domain of the function being evaluated,
/// or a finite-difference stencil would leave it.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget (or could not refine
/// a panel further) with the error estimate still above tolerance.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double partial_value,
                 double error_estimate, long evaluations)
      : Error(what),
        partial_value_(partial_value),
        error_estimate_(error_estimate),
        evaluations_(evaluations) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }
  long evaluations() const noexcept { return evaluations_; }

 private:
  double partial_value_;
  double error_estimate_;
  long evaluations_;
};

/// The requested operation has no catalogue entry for this model.
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

/// A point does not belong to the ambient space (wrong length, not unit norm).
class InvalidPoint : public Error {
 public:
  using Error::Error;
};

/// The group's enumeration depth does not cover every element that could
/// realize a minimum distance for the given points.
class DepthInsufficient : public Error {
 public:
  using Error::Error;
};

/// A group action violated one of its defining identities.
class SelfCheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace radharm
