#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gaitlocus/errors.hpp"

namespace gaitlocus {

/**
 * Contract every optimizable system satisfies: a scalar displacement
 * functional g(p) and a scalar cost functional s(p) over a finite parameter
 * vector. Evaluations must be deterministic and side-effect-free; the same p
 * always yields the same values.
 */
class SystemModel {
 public:
  virtual ~SystemModel() = default;

  virtual std::string name() const = 0;
  virtual int dimension() const = 0;
  virtual double displacement(const Eigen::VectorXd& p) const = 0;
  virtual double cost(const Eigen::VectorXd& p) const = 0;

  /// Evaluate (g, s) together; override when the functionals share work.
  virtual std::pair<double, double> displacement_and_cost(const Eigen::VectorXd& p) const {
    return {displacement(p), cost(p)};
  }

  /// Directions in parameter space that change p without changing the gait
  /// cycle itself (e.g. a common phase shift of Fourier coefficients).
  virtual std::vector<Eigen::VectorXd> gauge_directions(const Eigen::VectorXd& p) const {
    (void)p;
    return {};
  }
};

/// Adapter wrapping plain callables; used by analytic testbeds.
class CallableModel : public SystemModel {
 public:
  using Field = std::function<double(const Eigen::VectorXd&)>;

  CallableModel(std::string name, int dim, Field displacement, Field cost)
      : name_(std::move(name)), dim_(dim), g_(std::move(displacement)), s_(std::move(cost)) {}

  std::string name() const override { return name_; }
  int dimension() const override { return dim_; }
  double displacement(const Eigen::VectorXd& p) const override { return g_(p); }
  double cost(const Eigen::VectorXd& p) const override { return s_(p); }

 private:
  std::string name_;
  int dim_;
  Field g_, s_;
};

struct ModelGradients {
  Eigen::VectorXd g, s;
};
struct ModelHessians {
  Eigen::MatrixXd g, s;
};

/// Central-difference gradients of both functionals, sharing probe evaluations.
ModelGradients model_gradients(const SystemModel& model, const Eigen::VectorXd& p, double h);

/// Central-stencil Hessians of both functionals, sharing probe evaluations.
ModelHessians model_hessians(const SystemModel& model, const Eigen::VectorXd& p, double h);

}  // namespace gaitlocus
