#pragma once

#include <stdexcept>
#include <string>

namespace sens {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series, continued fraction or root search failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incoherent test specification, e.g. an effect-size metric that does not
// belong to the test family.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Data for which the requested statistic is undefined (zero variance,
// all-zero frequencies).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid simulation configuration or unreadable config document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sens
