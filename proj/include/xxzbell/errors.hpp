#pragma once

#include <stdexcept>
#include <string>

namespace xxzbell {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds what a code path is built to handle (e.g. oracle size caps).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative method failed to reach its residual tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Bisection bracket does not straddle a sector change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid sweep configuration, raised before any computation starts.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xxzbell
