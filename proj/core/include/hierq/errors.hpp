#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hierq {

// Bad shapes, out-of-range parameters, malformed inputs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation produced values that can only come from an invalid input,
// e.g. a clearly negative Born probability.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative projection ran out of cycles before meeting its tolerance.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, double residual,
                     std::optional<double> alpha = std::nullopt)
      : std::runtime_error(what), residual_(residual), alpha_(alpha) {}

  double residual() const noexcept { return residual_; }
  // Mixing parameter of the offending sweep point, when raised from a sweep.
  std::optional<double> alpha() const noexcept { return alpha_; }

 private:
  double residual_;
  std::optional<double> alpha_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hierq
