#pragma once

#include <stdexcept>
#include <string>

namespace mobi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was evaluated outside the carrier it is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad instance identifiers, sampler output outside its carrier, bad flags.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// An operation produced a value outside its declared carrier.
class ClosureError : public Error {
 public:
  ClosureError(const std::string& what, std::string value_json)
      : Error(what), value_json_(std::move(value_json)) {}
  const std::string& value_json() const { return value_json_; }

 private:
  std::string value_json_;
};

// A structure could not be built because its preconditions do not hold.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A conversion was refused because its input lacks a required property;
// carries the report that shows it.
class RefusedConversion : public ConstructionError {
 public:
  RefusedConversion(const std::string& what, std::string report_json)
      : ConstructionError(what), report_json_(std::move(report_json)) {}
  const std::string& report_json() const { return report_json_; }

 private:
  std::string report_json_;
};

// Integration left the field's domain (or produced non-finite state).
class FlowEscape : public Error {
 public:
  FlowEscape(const std::string& what, double exit_parameter)
      : Error(what), exit_parameter_(exit_parameter) {}
  double exit_parameter() const { return exit_parameter_; }

 private:
  double exit_parameter_;
};

class ShootingFailure : public Error {
 public:
  ShootingFailure(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

// Time-augmented field evaluated with zero time velocity and nonzero space velocity.
class SingularVelocity : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mobi
