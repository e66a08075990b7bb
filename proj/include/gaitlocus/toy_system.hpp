#pragma once

#include "gaitlocus/system_model.hpp"

namespace gaitlocus::toy {

/// Axis-aligned ellipse centered at the origin: (p1 cos phi, sqrt(p2) sin phi).
/// p1 is the semi-major axis; p2 is the semi-minor axis squared.
struct ToyEllipseParams {
  double p1 = 1.0;
  double p2 = 1.0;
};

/**
 * Enclosed area weighted by the field quality (1 - a1^2 - a2^2), computed via
 * Green's theorem as the line integral of (a1 - a1^3/3 - a1 a2^2) d a2 over
 * the sampled ellipse with periodic trapezoidal quadrature. This is the toy's
 * displacement functional g(p).
 */
double weighted_area(const ToyEllipseParams& params, int n_samples);

/// Euclidean arclength of the ellipse, trapezoidal quadrature of |dr/dphi|.
/// This is the toy's cost functional s(p).
double perimeter(const ToyEllipseParams& params, int n_samples);

/// The weighted area-perimeter system in the 2-parameter ellipse space.
class ToySystem : public SystemModel {
 public:
  explicit ToySystem(int n_samples = 512) : n_samples_(n_samples) {}

  std::string name() const override { return "toy"; }
  int dimension() const override { return 2; }
  double displacement(const Eigen::VectorXd& p) const override;
  double cost(const Eigen::VectorXd& p) const override;

  int n_samples() const { return n_samples_; }

 private:
  int n_samples_;
};

}  // namespace gaitlocus::toy
