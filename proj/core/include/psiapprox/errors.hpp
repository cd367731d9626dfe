#pragma once

#include <stdexcept>
#include <string>

namespace psiapprox {

// Argument outside the domain of a function (t < 1, a <= 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Value outside the range that an inverse can map back (y > psi(1), y <= 0).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// A precondition on structural arguments failed (N >= M, empty sums, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Theorem hypotheses eta(n) - n >= a > 2, mu(n) >= b > 2 do not hold.
class HypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An iterative procedure hit its cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psiapprox
