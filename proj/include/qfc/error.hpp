#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

/// Bad or inconsistent configuration input. `key()` names the offending
/// entry when there is one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integration diverged, a pole was hit, or a result failed a sanity check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfc
