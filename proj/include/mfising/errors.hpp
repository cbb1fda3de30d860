#pragma once

#include <stdexcept>
#include <string>

namespace mfising {

/// Argument outside the domain of a formula (|m| >= 1, beta <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Problem size beyond what an exact method supports (e.g. N > 20 for enumeration).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A numerical routine produced a result that violates its own contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mfising
