#pragma once

#include <stdexcept>
#include <string>

namespace macd {

/// Malformed or unsupported input (non-regular shape, bad flags). CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured term cap. CLI exit code 3.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation hit a vanishing denominator factor.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A consistency check that can only fail through a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace macd
