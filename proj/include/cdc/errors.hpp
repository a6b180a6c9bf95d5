#pragma once

#include <stdexcept>
#include <string>

namespace cdc {

/// Invalid parameter value; `field()` names the offending input.
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// The steady-state system matrix is exactly singular (zero total damping).
class SingularSystemError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A pulse grid does not contain the requested waveform (tail mass too large).
class TruncationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integrator step size does not resolve the fastest system rate.
class StepSizeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// File I/O failure; message carries the path.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cdc
