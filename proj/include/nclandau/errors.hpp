#pragma once

#include <stdexcept>
#include <string>

namespace nclandau {

/// Invalid user-facing configuration. `field()` names the offending input.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters for which the effective oscillator has no positive frequency.
class DegenerateRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Hamiltonian that does not have the symmetric-gauge Landau structure.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical procedure failed to reach its requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nclandau
