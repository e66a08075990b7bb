#include "gaitlocus/gait.hpp"

#include <cmath>
#include <numbers>

namespace gaitlocus::gait {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GaitParams GaitParams::zeros(int n_joints, int order) {
  if (n_joints < 1 || order < 0) throw InvalidArgument("GaitParams: need n_joints >= 1, order >= 0");
  GaitParams p;
  p.n_joints = n_joints;
  p.order = order;
  p.coefficients = Eigen::VectorXd::Zero(p.dim());
  return p;
}

GaitParams GaitParams::from_vector(int n_joints, int order, const Eigen::VectorXd& p) {
  GaitParams g = zeros(n_joints, order);
  if (p.size() != g.dim()) {
    throw InvalidArgument("GaitParams::from_vector: expected " + std::to_string(g.dim()) +
                          " coefficients, got " + std::to_string(p.size()));
  }
  g.coefficients = p;
  return g;
}

nlohmann::json GaitParams::to_json() const {
  nlohmann::json blocks = nlohmann::json::array();
  for (int j = 0; j < n_joints; ++j) {
    nlohmann::json block = nlohmann::json::array();
    for (int i = 0; i < block_size(); ++i) block.push_back(coefficients(j * block_size() + i));
    blocks.push_back(block);
  }
  return nlohmann::json{{"n_joints", n_joints}, {"order", order}, {"coefficients", blocks}};
}

GaitParams GaitParams::from_json(const nlohmann::json& j) {
  GaitParams g = zeros(j.at("n_joints").get<int>(), j.at("order").get<int>());
  const auto& blocks = j.at("coefficients");
  if (static_cast<int>(blocks.size()) != g.n_joints) {
    throw InvalidArgument("GaitParams::from_json: coefficient blocks do not match n_joints");
  }
  for (int jj = 0; jj < g.n_joints; ++jj) {
    const auto& block = blocks.at(jj);
    if (static_cast<int>(block.size()) != g.block_size()) {
      throw InvalidArgument("GaitParams::from_json: block size does not match order");
    }
    for (int i = 0; i < g.block_size(); ++i) {
      g.coefficients(jj * g.block_size() + i) = block.at(i).get<double>();
    }
  }
  return g;
}

void evaluate_gait(const GaitParams& params, double phi, Eigen::VectorXd& r, Eigen::VectorXd& rdot) {
  r.resize(params.n_joints);
  rdot.resize(params.n_joints);
  for (int j = 0; j < params.n_joints; ++j) {
    double value = params.a0(j);
    double deriv = 0.0;
    for (int k = 1; k <= params.order; ++k) {
      const double c = std::cos(k * phi);
      const double s = std::sin(k * phi);
      value += params.a(j, k) * c + params.b(j, k) * s;
      deriv += k * (params.b(j, k) * c - params.a(j, k) * s);
    }
    r(j) = value;
    rdot(j) = deriv;
  }
}

ShapeTrajectory sample_gait(const GaitParams& params, int n_samples) {
  const int floor = std::max(8, 8 * params.order);
  if (n_samples < floor) {
    throw InvalidArgument("sample_gait: n_samples = " + std::to_string(n_samples) +
                          " is below the resolution floor " + std::to_string(floor));
  }
  ShapeTrajectory traj;
  traj.phase.resize(n_samples);
  traj.r.resize(params.n_joints, n_samples);
  traj.rdot.resize(params.n_joints, n_samples);
  Eigen::VectorXd r(params.n_joints), rdot(params.n_joints);
  for (int i = 0; i < n_samples; ++i) {
    const double phi = kTwoPi * i / n_samples;
    evaluate_gait(params, phi, r, rdot);
    traj.phase(i) = phi;
    traj.r.col(i) = r;
    traj.rdot.col(i) = rdot;
  }
  return traj;
}

GaitParams phase_shift(const GaitParams& params, double dphi) {
  GaitParams out = params;
  for (int j = 0; j < params.n_joints; ++j) {
    for (int k = 1; k <= params.order; ++k) {
      const double c = std::cos(k * dphi);
      const double s = std::sin(k * dphi);
      const double a = params.a(j, k);
      const double b = params.b(j, k);
      out.a(j, k) = a * c + b * s;
      out.b(j, k) = -a * s + b * c;
    }
  }
  return out;
}

Eigen::VectorXd phase_shift_generator(const GaitParams& params) {
  Eigen::VectorXd t = Eigen::VectorXd::Zero(params.dim());
  for (int j = 0; j < params.n_joints; ++j) {
    for (int k = 1; k <= params.order; ++k) {
      const int ia = j * params.block_size() + 2 * k - 1;
      t(ia) = k * params.b(j, k);
      t(ia + 1) = -k * params.a(j, k);
    }
  }
  return t;
}

}  // namespace gaitlocus::gait
