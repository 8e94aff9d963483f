#pragma once

#include <stdexcept>

namespace nt {

// Argument outside the range covered by a sieve table or a precondition bound.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside the mathematical domain of an operation (e.g. a
// non-squarefree modulus where a squarefree one is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Product of log-forms whose degree would exceed 2.
class DegreeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A floating-point or exact cross-check failed; always indicates a bug.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nt
