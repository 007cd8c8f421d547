#pragma once

#include <stdexcept>
#include <string>

namespace asianlt {

// Argument outside the domain on which a formula is defined or proven
// (branch cut, gated half-plane, Gamma pole).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series, quadrature or acceleration scheme missed its tolerance within
// the configured budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-facing inputs (contract data, configuration).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed result violates a hard a-posteriori property (e.g. a
// significantly negative option value).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asianlt
