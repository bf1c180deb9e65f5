#ifndef WAVEPATTERNS_ERRORS_HPP
#define WAVEPATTERNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wavepatterns {

// Invalid physical input (non-positive volume/temperature, negative time, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A nonlinear solve failed to converge; carries the last residual seen.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

// Truncated computational domain too small for the requested problem.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// End states / settings outside the supported wave configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A diagnostic fit could not be performed (degenerate data).
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time integration aborted (positivity loss, NaN); carries the step index.
class RunAbort : public std::runtime_error {
 public:
  RunAbort(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

}  // namespace wavepatterns

#endif
