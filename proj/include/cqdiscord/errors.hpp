#ifndef CQDISCORD_ERRORS_HPP
#define CQDISCORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cqd {

// Argument outside the mathematical domain of an operation (bad index,
// wrong label, probability outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A matrix or Bloch vector that fails density-operator validation. The
// message names the violated invariant.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The elliptic constraint region collapses (s0 * s1 * sin(phi) == 0).
class DegenerateDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Closed-form correlations requested outside the equal-purity regime.
class UnsupportedRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cqd

#endif  // CQDISCORD_ERRORS_HPP
