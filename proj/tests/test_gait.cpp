/// @file test_gait.cpp
/// Fourier gait parametrization, sampling, and phase shifts.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gaitlocus/gait.hpp"
#include "gaitlocus/swimmer.hpp"

using namespace gaitlocus;
using gait::GaitParams;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("gait") {

TEST_CASE("single-joint cosine gait samples correctly") {
  GaitParams p = GaitParams::zeros(1, 1);
  p.a(0, 1) = 1.0;
  const auto traj = gait::sample_gait(p, 16);
  CHECK(traj.r(0, 0) == doctest::Approx(1.0));
  CHECK(traj.r(0, 4) == doctest::Approx(0.0).epsilon(1e-12));  // phi = pi/2
  CHECK(traj.rdot(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("zero coefficients give the zero trajectory") {
  const auto traj = gait::sample_gait(GaitParams::zeros(2, 2), 64);
  CHECK(traj.r.cwiseAbs().maxCoeff() == 0.0);
  CHECK(traj.rdot.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sampling agrees with direct evaluation at an arbitrary phase") {
  GaitParams p = GaitParams::zeros(2, 2);
  p.a0(0) = 0.2;
  p.a(0, 1) = 0.7;
  p.b(0, 2) = -0.4;
  p.a(1, 2) = 0.3;
  p.b(1, 1) = 1.1;
  const double phi = 0.37;
  Eigen::VectorXd r, rdot;
  gait::evaluate_gait(p, phi, r, rdot);
  const double expected0 = 0.2 + 0.7 * std::cos(phi) - 0.4 * std::sin(2 * phi);
  const double expected1 = 0.3 * std::cos(2 * phi) + 1.1 * std::sin(phi);
  CHECK(std::abs(r(0) - expected0) < 1e-14);
  CHECK(std::abs(r(1) - expected1) < 1e-14);
}

TEST_CASE("sample_gait rejects counts below the resolution floor") {
  GaitParams p = GaitParams::zeros(1, 3);
  CHECK_THROWS_AS(gait::sample_gait(p, 23), InvalidArgument);
}

TEST_CASE("phase shift by 2 pi is the identity") {
  GaitParams p = GaitParams::zeros(2, 3);
  p.coefficients.setLinSpaced(p.dim(), -0.9, 1.3);
  const GaitParams shifted = gait::phase_shift(p, 2.0 * kPi);
  CHECK((shifted.coefficients - p.coefficients).cwiseAbs().maxCoeff() < 1e-14);
  const GaitParams zero_shift = gait::phase_shift(p, 0.0);
  CHECK((zero_shift.coefficients - p.coefficients).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("phase shift advances the sampled curve") {
  GaitParams p = GaitParams::zeros(2, 3);
  p.a(0, 1) = 1.0;
  p.b(1, 1) = 0.8;
  p.a(1, 3) = 0.2;
  const double dphi = 0.61;
  const GaitParams shifted = gait::phase_shift(p, dphi);
  Eigen::VectorXd r1, rd1, r2, rd2;
  for (double phi : {0.0, 1.1, 4.4}) {
    gait::evaluate_gait(shifted, phi, r1, rd1);
    gait::evaluate_gait(p, phi + dphi, r2, rd2);
    CHECK((r1 - r2).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((rd1 - rd2).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("swimmer cost is invariant under phase shift") {
  const swimmer::SwimmerGeometry geom = swimmer::SwimmerGeometry::three_link();
  GaitParams p = GaitParams::zeros(2, 3);
  p.a(0, 1) = 0.9;
  p.b(1, 1) = 0.9;
  p.a(1, 2) = 0.15;
  const GaitParams shifted = gait::phase_shift(p, 0.7);
  const double s0 = swimmer::pathlength_cost(geom, gait::sample_gait(p, 512));
  const double s1 = swimmer::pathlength_cost(geom, gait::sample_gait(shifted, 512));
  CHECK(std::abs(s0 - s1) < 1e-10);
}

TEST_CASE("swimmer displacement under phase shift changes only by the"
          " start-frame conjugation") {
  // The exact SE(2) reconstruction measures x in the frame at the cycle
  // start, so a phase shift conjugates the displacement by the mid-cycle
  // pose; the x component is preserved only to that (small) effect, not to
  // machine precision.
  const swimmer::SwimmerGeometry geom = swimmer::SwimmerGeometry::three_link();
  GaitParams p = GaitParams::zeros(2, 3);
  p.a(0, 1) = 0.9;
  p.b(1, 1) = 0.9;
  const GaitParams shifted = gait::phase_shift(p, 0.7);
  const auto d0 = swimmer::net_displacement(geom, gait::sample_gait(p, 512));
  const auto d1 = swimmer::net_displacement(geom, gait::sample_gait(shifted, 512));
  CHECK(std::abs(d0.translation_norm() - d1.translation_norm()) <
        5e-3 * std::abs(d0.translation_norm()));
  CHECK(std::abs(d0.x - d1.x) < 2e-2 * std::abs(d0.x));
}

TEST_CASE("least-squares refit of sampled gait recovers coefficients") {
  GaitParams p = GaitParams::zeros(2, 3);
  p.coefficients.setLinSpaced(p.dim(), -0.8, 1.1);
  const int n = 128;
  const auto traj = gait::sample_gait(p, n);

  const int cols = p.block_size();
  Eigen::MatrixXd design(n, cols);
  for (int i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    for (int k = 1; k <= p.order; ++k) {
      design(i, 2 * k - 1) = std::cos(k * traj.phase(i));
      design(i, 2 * k) = std::sin(k * traj.phase(i));
    }
  }
  for (int j = 0; j < p.n_joints; ++j) {
    const Eigen::VectorXd rhs = traj.r.row(j).transpose();
    const Eigen::VectorXd fit = design.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXd truth = p.coefficients.segment(j * cols, cols);
    CHECK((fit - truth).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("phase shift generator matches the finite shift derivative") {
  GaitParams p = GaitParams::zeros(2, 2);
  p.coefficients.setLinSpaced(p.dim(), -1.0, 1.0);
  const double eps = 1e-6;
  const Eigen::VectorXd fd = (gait::phase_shift(p, eps).coefficients -
                              gait::phase_shift(p, -eps).coefficients) /
                             (2.0 * eps);
  const Eigen::VectorXd gen = gait::phase_shift_generator(p);
  CHECK((fd - gen).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("JSON round trip is lossless") {
  GaitParams p = GaitParams::zeros(3, 2);
  p.coefficients.setLinSpaced(p.dim(), -0.77, 0.91);
  const GaitParams back = GaitParams::from_json(p.to_json());
  CHECK(back.n_joints == p.n_joints);
  CHECK(back.order == p.order);
  CHECK((back.coefficients - p.coefficients).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("from_vector rejects mismatched sizes") {
  CHECK_THROWS_AS(GaitParams::from_vector(2, 2, Eigen::VectorXd::Zero(9)), InvalidArgument);
}

}  // TEST_SUITE
