/// @file test_locus.cpp
/// Multiplier algebra, Lagrangian Hessian, projection step, classification,
/// and continuation traces on analytic testbeds and the toy system.

#include <doctest.h>

#include <cmath>
#include <random>

#include "gaitlocus/locus.hpp"
#include "gaitlocus/optimizer.hpp"
#include "gaitlocus/toy_system.hpp"
#include "oracles.hpp"

using namespace gaitlocus;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd vec2(double a, double b) {
  VectorXd v(2);
  v << a, b;
  return v;
}

/// Seed circle for the toy system at the unconstrained efficiency optimum.
VectorXd toy_seed() {
  const double radius = std::sqrt(2.0 / 3.0);
  return vec2(radius, radius * radius);
}

}  // namespace

TEST_SUITE("locus") {

TEST_CASE("optimal_lambda on hand cases") {
  CHECK(locus::optimal_lambda(vec2(2, 0), vec2(1, 0)) == doctest::Approx(2.0));
  CHECK(locus::optimal_lambda(vec2(0, 5), vec2(1, 0)) == doctest::Approx(0.0));
  VectorXd g(4);
  g << 0.3, -1.2, 0.5, 2.0;
  CHECK(locus::optimal_lambda(VectorXd(3.0 * g), g) == doctest::Approx(3.0));
  CHECK_THROWS_AS(locus::optimal_lambda(vec2(1, 1), vec2(0, 0)), DegenerateConstraint);
}

TEST_CASE("residual of optimal_lambda is orthogonal to grad g at generic points") {
  std::mt19937 rng(5);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    VectorXd gs(6), gg(6);
    for (int i = 0; i < 6; ++i) {
      gs(i) = normal(rng);
      gg(i) = normal(rng);
    }
    if (gg.norm() < 1e-6) continue;
    const double lambda = locus::optimal_lambda(gs, gg);
    CHECK(std::abs((gs - lambda * gg).dot(gg)) < 1e-10);
  }
}

TEST_CASE("lambda gradient vanishes when s and g coincide") {
  const CallableModel model(
      "identical", 2, [](const VectorXd& p) { return p(0) * p(0) + 0.5 * p(1); },
      [](const VectorXd& p) { return p(0) * p(0) + 0.5 * p(1); });
  const VectorXd dl = locus::lambda_gradient(model, vec2(0.7, -0.4));
  CHECK(dl.norm() < 1e-6);
}

TEST_CASE("lambda gradient on the linear-quadratic testbed") {
  const CallableModel model(
      "lin-quad", 2, [](const VectorXd& p) { return p(0); },
      [](const VectorXd& p) { return p(0) * p(0); });
  const VectorXd dl = locus::lambda_gradient(model, vec2(0.3, 0.9));
  CHECK(std::abs(dl(0) - 2.0) < 1e-6);
  CHECK(std::abs(dl(1)) < 1e-6);
}

TEST_CASE("lambda gradient matches finite differences of optimal_lambda on the toy") {
  const toy::ToySystem model(512);
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> axis(0.5, 1.1);
  const VectorXd p = vec2(axis(rng), axis(rng));

  const VectorXd dl = locus::lambda_gradient(model, p);
  const auto lambda_at = [&](const VectorXd& q) {
    const auto grads = model_gradients(model, q, calculus::fd_step(q, 1e-4));
    return locus::optimal_lambda(grads.s, grads.g);
  };
  VectorXd fd(2);
  const double h = 1e-4;
  for (int i = 0; i < 2; ++i) {
    VectorXd qp = p, qm = p;
    qp(i) += h;
    qm(i) -= h;
    fd(i) = (lambda_at(qp) - lambda_at(qm)) / (2.0 * h);
  }
  CHECK((dl - fd).norm() < 1e-3 * std::max(1.0, fd.norm()));
}

TEST_CASE("Lagrangian Hessian of the quadratic testbed") {
  const CallableModel model = oracles::quadratic_testbed();
  const MatrixXd H = locus::lagrangian_hessian(model, vec2(0.8, 0.0));
  MatrixXd expected(2, 2);
  expected << 0, 0, 0, 2;
  CHECK((H - expected).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("Lagrangian Hessian vanishes when s equals g") {
  const CallableModel model(
      "identical", 2, [](const VectorXd& p) { return std::sin(p(0)) + p(1) * p(1); },
      [](const VectorXd& p) { return std::sin(p(0)) + p(1) * p(1); });
  const MatrixXd H = locus::lagrangian_hessian(model, vec2(0.4, 0.6));
  CHECK(H.cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("locus tangent of the toy circle family is null for the Hessian") {
  const toy::ToySystem model(512);
  locus::LocusOptions opts;
  const auto polished = locus::polish_stationary(model, toy_seed(), opts, 200);
  REQUIRE(polished.converged);

  const MatrixXd H = locus::lagrangian_hessian(model, polished.p);
  // Circle family p = (R, R^2): tangent directed along (1, 2R).
  VectorXd tangent = vec2(1.0, 2.0 * polished.p(0));
  tangent.normalize();
  CHECK((H * tangent).norm() <= 1e-3 * H.norm());
}

TEST_CASE("locus step on the quadratic testbed is the projected -grad g") {
  const CallableModel model = oracles::quadratic_testbed();
  const VectorXd step = locus::locus_step(model, vec2(1.0, 0.0));
  CHECK(std::abs(step(0) + 1.0) < 1e-4);
  CHECK(std::abs(step(1)) < 1e-4);
}

TEST_CASE("locus step equals -grad g when the whole space is null") {
  const CallableModel model(
      "identical", 2, [](const VectorXd& p) { return p(0); },
      [](const VectorXd& p) { return p(0); });
  const VectorXd step = locus::locus_step(model, vec2(0.2, -0.5));
  CHECK(std::abs(step(0) + 1.0) < 1e-9);
  CHECK(std::abs(step(1)) < 1e-9);
}

TEST_CASE("locus step at the toy seed shrinks the circle") {
  const toy::ToySystem model(512);
  locus::LocusOptions opts;
  const auto polished = locus::polish_stationary(model, toy_seed(), opts, 200);
  const VectorXd step = locus::locus_step(model, polished.p, opts);

  VectorXd expected = vec2(-1.0, -2.0 * polished.p(0));
  expected.normalize();
  const double cosine = step.normalized().dot(expected);
  CHECK(cosine > std::cos(5.0 * std::numbers::pi / 180.0));
}

TEST_CASE("classification on analytic constrained problems") {
  const CallableModel min_case = oracles::quadratic_testbed();
  CHECK(locus::classify_stationary(min_case, vec2(0.6, 0.0), 1.2) ==
        locus::Classification::minimizer);

  const CallableModel max_case(
      "neg-quadratic", 2, [](const VectorXd& p) { return p(0); },
      [](const VectorXd& p) { return -(p(0) * p(0) + p(1) * p(1)); });
  CHECK(locus::classify_stationary(max_case, vec2(0.6, 0.0), -1.2) ==
        locus::Classification::maximizer);

  // With a single constraint in two parameters the restricted space is one
  // dimensional, so s = p1^2 - p2^2 is a constrained maximizer on p1 = c.
  const CallableModel two_dim_saddle(
      "saddle-2d", 2, [](const VectorXd& p) { return p(0); },
      [](const VectorXd& p) { return p(0) * p(0) - p(1) * p(1); });
  CHECK(locus::classify_stationary(two_dim_saddle, vec2(0.6, 0.0), 1.2) ==
        locus::Classification::maximizer);

  // A genuine constrained saddle needs a two-dimensional restricted space.
  const CallableModel three_dim_saddle(
      "saddle-3d", 3, [](const VectorXd& p) { return p(0); },
      [](const VectorXd& p) { return p(0) * p(0) - p(1) * p(1) + p(2) * p(2); });
  VectorXd p3(3);
  p3 << 0.6, 0.0, 0.0;
  CHECK(locus::classify_stationary(three_dim_saddle, p3, 1.2) == locus::Classification::saddle);
}

TEST_CASE("classification rejects clearly non-stationary points") {
  const toy::ToySystem model(512);
  const VectorXd p = vec2(1.1, 0.3);  // far from any constrained optimum
  CHECK_THROWS_AS(locus::classify_stationary(model, p, 0.5), InvalidArgument);
}

TEST_CASE("bordered Hessian has the documented block layout") {
  const CallableModel model = oracles::quadratic_testbed();
  const MatrixXd B = locus::bordered_hessian(model, vec2(0.5, 0.0), 1.0);
  REQUIRE(B.rows() == 3);
  CHECK(B(0, 0) == 0.0);
  CHECK(std::abs(B(0, 1) - 1.0) < 1e-6);  // grad g border
  CHECK(std::abs(B(1, 0) - 1.0) < 1e-6);
  CHECK(std::abs(B(0, 2)) < 1e-6);
  CHECK(std::abs(B(1, 1) - 2.0) < 1e-4);  // hess s block
  CHECK(std::abs(B(2, 2) - 2.0) < 1e-4);
  CHECK((B - B.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("trace on the quadratic testbed follows the stationary ray") {
  const CallableModel model = oracles::quadratic_testbed();
  locus::LocusOptions opts;
  opts.min_displacement = 0.1;
  opts.rk_step = 0.02;
  opts.max_steps = 200;
  const auto trace = locus::trace_locus(model, vec2(1.0, 0.0), opts);

  CHECK(trace.stop_reason == locus::StopReason::min_displacement_reached);
  CHECK(trace.states.front().displacement == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(trace.states.back().displacement <= 0.1 + 1e-9);
  for (size_t i = 0; i < trace.states.size(); ++i) {
    const auto& st = trace.states[i];
    CHECK(std::abs(st.p(1)) < 1e-6);
    CHECK(st.classification == locus::Classification::minimizer);
    if (i > 0) CHECK(st.displacement < trace.states[i - 1].displacement);
  }
}

TEST_CASE("trace on the toy stays on the circle family") {
  const toy::ToySystem model(512);
  locus::LocusOptions opts;
  const auto polished = locus::polish_stationary(model, toy_seed(), opts, 200);
  REQUIRE(polished.converged);
  const double g_seed = model.displacement(polished.p);
  opts.min_displacement = 0.5 * g_seed;  // short run; the full one lives in acceptance
  opts.max_steps = 400;

  const auto trace = locus::trace_locus(model, polished.p, opts);
  CHECK(trace.stop_reason == locus::StopReason::min_displacement_reached);
  for (const auto& st : trace.states) {
    CHECK(std::abs(st.p(0) - std::sqrt(st.p(1))) <= 1e-3 * st.p(0));
    CHECK(st.grad_L_norm <= 1e-6 * (1.0 + std::abs(st.cost)) + 1e-12);
  }
}

TEST_CASE("trace cost is minimal among feasible competitors at matched levels") {
  const toy::ToySystem model(512);
  locus::LocusOptions opts;
  const auto polished = locus::polish_stationary(model, toy_seed(), opts, 200);
  const double g_seed = model.displacement(polished.p);
  opts.min_displacement = 0.4 * g_seed;
  opts.max_steps = 400;
  const auto trace = locus::trace_locus(model, polished.p, opts);

  // Sample competitor ellipses with the same enclosed weighted area.
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> stretch(0.6, 1.6);
  optimizer::OptimizerOptions solve_opts;
  for (size_t idx : {trace.states.size() / 2, trace.states.size() - 1}) {
    const auto& st = trace.states[idx];
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 20; ++trial) {
      const double k = stretch(rng);
      // Scale p1 by k, then solve p2 so the weighted area matches st.g.
      // Area = pi a b (1 - (a^2+b^2)/4) is increasing in p2 = b^2 up to
      // b^2 = (4 - a^2)/3, so bisect on that branch only.
      const double p1 = st.p(0) * k;
      const auto area_of = [&](double p2) { return model.displacement(vec2(p1, p2)); };
      double lo = 1e-6;
      double hi = std::max(1e-3, (4.0 - p1 * p1) / 3.0);
      if (area_of(hi) < st.displacement || area_of(lo) > st.displacement) continue;
      for (int bisect = 0; bisect < 200; ++bisect) {
        const double mid = 0.5 * (lo + hi);
        (area_of(mid) < st.displacement ? lo : hi) = mid;
      }
      const double p2 = 0.5 * (lo + hi);
      if (std::abs(area_of(p2) - st.displacement) > 1e-8) continue;
      const double competitor_cost = model.cost(vec2(p1, p2));
      CHECK(st.cost <= competitor_cost * 1.005);
      ++tested;
    }
    CHECK(tested >= 10);
  }
}

TEST_CASE("invalid seeds are rejected with diagnostics") {
  const toy::ToySystem model(512);
  locus::LocusOptions opts;
  opts.polish_max_iters = 0;  // no polish: the raw point must fail
  try {
    locus::trace_locus(model, vec2(1.1, 0.2), opts);
    FAIL("expected InvalidSeed");
  } catch (const InvalidSeed& e) {
    CHECK(e.grad_norm() > 0.0);
    CHECK(std::string(e.what()).find("stationary") != std::string::npos);
  }
}

}  // TEST_SUITE
