/// @file test_toy.cpp
/// Weighted area-perimeter toy system against quadrature oracles.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gaitlocus/toy_system.hpp"
#include "oracles.hpp"

using namespace gaitlocus;
using toy::ToyEllipseParams;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("toy") {

TEST_CASE("weighted area of the unit circle is pi/2") {
  const double area = toy::weighted_area(ToyEllipseParams{1.0, 1.0}, 512);
  CHECK(std::abs(area - kPi / 2.0) < 1e-6);
  CHECK(std::abs(area - oracles::circle_weighted_area(1.0)) < 1e-6);
}

TEST_CASE("weighted area of a half-radius circle matches the polar oracle") {
  const double area = toy::weighted_area(ToyEllipseParams{0.5, 0.25}, 512);
  CHECK(std::abs(area - kPi * (0.25 - 0.03125)) < 1e-6);
  CHECK(std::abs(area - oracles::circle_weighted_area(0.5)) < 1e-6);
}

TEST_CASE("weighted area vanishes in the degenerate limit") {
  const double area = toy::weighted_area(ToyEllipseParams{1e-9, 1e-18}, 512);
  CHECK(std::abs(area) < 1e-12);
}

TEST_CASE("non-positive axes are rejected") {
  CHECK_THROWS_AS(toy::weighted_area(ToyEllipseParams{0.0, 1.0}, 512), InvalidArgument);
  CHECK_THROWS_AS(toy::perimeter(ToyEllipseParams{1.0, -0.5}, 512), InvalidArgument);
  CHECK_THROWS_AS(toy::perimeter(ToyEllipseParams{1.0, 1.0}, 32), InvalidArgument);
}

TEST_CASE("perimeter of circles") {
  CHECK(std::abs(toy::perimeter(ToyEllipseParams{1.0, 1.0}, 512) - 2.0 * kPi) < 1e-8);
  CHECK(std::abs(toy::perimeter(ToyEllipseParams{0.5, 0.25}, 512) - kPi) < 1e-8);
}

TEST_CASE("ellipse perimeter matches the dense quadrature oracle") {
  const double value = toy::perimeter(ToyEllipseParams{2.0, 1.0}, 512);
  const double ref = oracles::ellipse_perimeter(2.0, 1.0);
  CHECK(std::abs(value - ref) < 1e-6);
}

TEST_CASE("weighted area is monotone in the radius for circles below 1") {
  double prev = 0.0;
  for (double radius : {0.2, 0.4, 0.6, 0.8, 0.95}) {
    const double area = toy::weighted_area(ToyEllipseParams{radius, radius * radius}, 512);
    CHECK(area > prev);
    prev = area;
  }
}

TEST_CASE("efficiency over circles peaks at radius sqrt(2/3)") {
  // Scan oracle for the unconstrained optimum of g/s.
  double best_r = 0.0, best = -1.0;
  for (int i = 1; i <= 10000; ++i) {
    const double radius = i / 10000.0;
    const double value = radius - radius * radius * radius / 2.0;  // ratio up to a constant
    if (value > best) {
      best = value;
      best_r = radius;
    }
  }
  CHECK(std::abs(best_r - std::sqrt(2.0 / 3.0)) < 1e-3);

  const toy::ToySystem system(512);
  Eigen::VectorXd p(2);
  p << best_r, best_r * best_r;
  const double eff_at_best = system.displacement(p) / system.cost(p);
  for (double radius : {0.6, 0.7, 0.9, 1.0}) {
    p << radius, radius * radius;
    CHECK(system.displacement(p) / system.cost(p) <= eff_at_best + 1e-9);
  }
}

}  // TEST_SUITE
