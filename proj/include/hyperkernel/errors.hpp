#pragma once

#include <stdexcept>
#include <string>

namespace hyperkernel {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a pole (Gamma function, hypergeometric c parameter,
// eigenvalue of the resolvent).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Argument on a branch cut with no side declared.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Series or quadrature failed to reach its tolerance within the caps.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperkernel
