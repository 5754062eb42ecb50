#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace swlbm {

/// Argument outside the domain of a physical map (non-positive density, etc.).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed form that only exists for gamma = 2 was asked for another exponent.
class UnsupportedExponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-positive or non-finite density inside a time loop.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t cell, long step, const std::string& what)
      : std::runtime_error(what), cell_(cell), step_(step) {}

  std::size_t cell() const { return cell_; }
  long step() const { return step_; }

 private:
  std::size_t cell_;
  long step_;
};

/// Newton iteration for a Legendre transform did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate)
      : std::runtime_error(what), last_(std::move(last_iterate)) {}

  const std::vector<double>& last_iterate() const { return last_; }

 private:
  std::vector<double> last_;
};

/// Riemann data that would open a dry (vacuum) region.
class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A metric could not be evaluated on the given field.
class MetricUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid case configuration; the message starts with the offending key path.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(key) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace swlbm
