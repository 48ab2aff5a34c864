#pragma once

#include <stdexcept>
#include <string>

namespace holder {

// Precondition violated by an argument (negative x, asin outside [-1, 1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZeroInterval : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument exceeds the sin/cos reduction budget (|t| <= 1e6).
class ArgumentTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A sign change that must exist could not be certified. Indicates a kernel defect.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SubdivisionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RemapFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace holder
