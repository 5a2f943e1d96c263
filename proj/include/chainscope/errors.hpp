#pragma once

#include <stdexcept>
#include <string>

namespace chainscope {

/// Invalid caller-supplied argument (bad grid size, unknown system name, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state outside the domain of a map.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was called on an input that violates its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed run configuration; `field` names the offending key when known.
class ConfigError : public ArgumentError {
 public:
  ConfigError(std::string field, const std::string& what)
      : ArgumentError(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace chainscope
