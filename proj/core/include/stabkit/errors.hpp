// Copyright (c) stabkit contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace stabkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument value or violated operation precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-violating input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Quadrature error estimate above the requested gate.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A quantity that is positive by theory failed its numerical positivity
/// check; the inputs (certificate or quadrature resolution) are at fault.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver stagnated or a linear system was (near-)singular.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Supplied feedback does not achieve the claimed decay rate.
class NotStabilizedError : public DomainError {
 public:
  NotStabilizedError(const std::string& what, double measured_abscissa)
      : DomainError(what), measured_abscissa_(measured_abscissa) {}
  double measured_abscissa() const { return measured_abscissa_; }

 private:
  double measured_abscissa_;
};

/// Requested decay rate is not achievable; carries the best achievable rate.
class RateUnreachableError : public DomainError {
 public:
  RateUnreachableError(const std::string& what, double omega_star)
      : DomainError(what), omega_star_(omega_star) {}
  double omega_star() const { return omega_star_; }

 private:
  double omega_star_;
};

}  // namespace stabkit
