#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gaitlocus {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument or precondition violation (bad sample counts, non-positive axes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A scalar field returned a non-finite value at a probe point.
class EvaluationFailure : public Error {
 public:
  EvaluationFailure(const std::string& msg, std::vector<double> probe)
      : Error(msg), probe_(std::move(probe)) {}
  const std::vector<double>& probe_point() const { return probe_; }

 private:
  std::vector<double> probe_;
};

/// Flow integration hit a non-finite field value.
class IntegrationFailure : public Error {
 public:
  IntegrationFailure(const std::string& msg, int step_index)
      : Error(msg), step_index_(step_index) {}
  int step_index() const { return step_index_; }

 private:
  int step_index_;
};

/// Swimmer force balance is numerically singular at a shape.
class SingularConfiguration : public Error {
 public:
  SingularConfiguration(const std::string& msg, std::vector<double> shape, int sample_index = -1)
      : Error(msg), shape_(std::move(shape)), sample_index_(sample_index) {}
  const std::vector<double>& shape() const { return shape_; }
  int sample_index() const { return sample_index_; }

 private:
  std::vector<double> shape_;
  int sample_index_;
};

/// A gait left the |alpha_i| joint box.
class JointLimitError : public Error {
 public:
  using Error::Error;
};

/// ||grad g|| vanished; the multiplier is undefined.
class DegenerateConstraint : public Error {
 public:
  using Error::Error;
};

/// The Lagrangian Hessian has no null direction at the working tolerance.
class SingularNullSpace : public Error {
 public:
  using Error::Error;
};

/// The projected continuation step vanished (only gauge directions left).
class StalledProjection : public Error {
 public:
  using Error::Error;
};

/// A continuation seed failed its stationarity / minimizer precondition.
class InvalidSeed : public Error {
 public:
  InvalidSeed(const std::string& msg, double grad_norm, std::string classification)
      : Error(msg), grad_norm_(grad_norm), classification_(std::move(classification)) {}
  double grad_norm() const { return grad_norm_; }
  const std::string& classification() const { return classification_; }

 private:
  double grad_norm_;
  std::string classification_;
};

/// The requested constraint level is not reachable from the given start.
class InfeasibleConstraint : public Error {
 public:
  using Error::Error;
};

/// CLI / configuration usage error.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaitlocus
