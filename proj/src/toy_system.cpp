#include "gaitlocus/toy_system.hpp"

#include <cmath>
#include <numbers>

namespace gaitlocus::toy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const ToyEllipseParams& params, int n_samples) {
  if (!(params.p1 > 0.0) || !(params.p2 > 0.0)) {
    throw InvalidArgument("toy ellipse requires positive axes: p1 = " + std::to_string(params.p1) +
                          ", p2 = " + std::to_string(params.p2));
  }
  if (n_samples < 64) {
    throw InvalidArgument("toy quadrature requires n_samples >= 64, got " +
                          std::to_string(n_samples));
  }
}

}  // namespace

double weighted_area(const ToyEllipseParams& params, int n_samples) {
  validate(params, n_samples);
  const double a = params.p1;
  const double b = std::sqrt(params.p2);
  // One-form (a1 - a1^3/3 - a1 a2^2) d a2; periodic trapezoid over the cycle.
  double sum = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double phi = kTwoPi * i / n_samples;
    const double a1 = a * std::cos(phi);
    const double a2 = b * std::sin(phi);
    const double da2 = b * std::cos(phi);
    sum += (a1 - a1 * a1 * a1 / 3.0 - a1 * a2 * a2) * da2;
  }
  return sum * kTwoPi / n_samples;
}

double perimeter(const ToyEllipseParams& params, int n_samples) {
  validate(params, n_samples);
  const double a = params.p1;
  const double b = std::sqrt(params.p2);
  double sum = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double phi = kTwoPi * i / n_samples;
    const double dx = -a * std::sin(phi);
    const double dy = b * std::cos(phi);
    sum += std::hypot(dx, dy);
  }
  return sum * kTwoPi / n_samples;
}

double ToySystem::displacement(const Eigen::VectorXd& p) const {
  return weighted_area(ToyEllipseParams{p(0), p(1)}, n_samples_);
}

double ToySystem::cost(const Eigen::VectorXd& p) const {
  return perimeter(ToyEllipseParams{p(0), p(1)}, n_samples_);
}

}  // namespace gaitlocus::toy
