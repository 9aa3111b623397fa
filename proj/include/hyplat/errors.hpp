#pragma once

#include <stdexcept>
#include <string>

namespace hyplat {

/// Base class of every numerical failure raised by the library.
/// Argument validation failures use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex theta argument outside q*exp(2*pi*|Im z|) < 0.9.
class ArgumentOutOfStrip : public Error {
 public:
  using Error::Error;
};

/// Weierstrass function requested within 1e-6 of a lattice point.
class TooCloseToPole : public Error {
 public:
  using Error::Error;
};

class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue scan exhausted its window without a sign change.
class BracketNotFound : public Error {
 public:
  using Error::Error;
};

/// lambda is not strictly inside (lambda-, lambda+): a shooting solution
/// vanished or its endpoint derivative has the wrong sign.
class OutsideBracket : public Error {
 public:
  using Error::Error;
};

/// An endpoint value used as a denominator is below 1e-12.
/// `limit_residual` carries the documented limit of e on that side.
class NearSingularQuotient : public Error {
 public:
  NearSingularQuotient(const std::string& what, double limit_residual)
      : Error(what), limit_residual_(limit_residual) {}
  double limit_residual() const noexcept { return limit_residual_; }

 private:
  double limit_residual_;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class BranchViolation : public Error {
 public:
  using Error::Error;
};

/// Tangent-circle data violated the positivity expected inside the bracket.
class GeometryViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hyplat
