#pragma once

#include <stdexcept>
#include <string>

namespace gkcp2 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the admissible parameter range (e.g. c3 outside the guard band).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure (root solve, Newton, series) failed to reach tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Evaluation too close to a pole of the lattice 2*Omega.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Moment point on or outside a face of the polygon.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

class InvalidCornerError : public Error {
 public:
  using Error::Error;
};

class ComposabilityError : public Error {
 public:
  using Error::Error;
};

class StepSizeError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference stencil would leave the admissible domain.
class StencilError : public Error {
 public:
  using Error::Error;
};

class JacobianError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkcp2
