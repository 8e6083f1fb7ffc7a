#pragma once

#include <stdexcept>
#include <string>

namespace hblab {

/// Invalid experiment configuration; `field` points at the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A numerical procedure failed to meet its accuracy contract
/// (quadrature non-convergence, eigensolver failure, ill-conditioning).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hblab
