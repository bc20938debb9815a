#pragma once

#include <stdexcept>
#include <string>

namespace mirfs {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration, parameters out of bounds, malformed input.
/// CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Numerical failure during a computation (NaN densities, singular
/// information matrices, overflow).  CLI maps this to exit code 3.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

/// The pre-normalization mass of an updated filter vanished: the model,
/// data and grid are mutually incompatible at the reported step.
class FilterCollapseError : public NumericError {
 public:
  FilterCollapseError(int step, const std::string& what)
      : NumericError(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

}  // namespace mirfs
