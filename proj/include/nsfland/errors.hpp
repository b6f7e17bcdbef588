#pragma once

#include <stdexcept>
#include <string>

namespace nsfland {

/// Argument outside the domain of an operation (bad index, inconsistent mask).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Problem too large for dense materialisation.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Externally supplied data (files, matrices, configs) failed validation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pivot vanished during factorisation.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nsfland
