#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include "gaitlocus/errors.hpp"

namespace gaitlocus::gait {

/**
 * Truncated per-joint Fourier parametrization of a closed gait:
 *
 *   r_j(phi) = a_j0 + sum_k ( a_jk cos(k phi) + b_jk sin(k phi) ),  k = 1..K.
 *
 * Coefficients flatten joint-major into p: for each joint the block
 * (a0, a1, b1, a2, b2, ..., aK, bK). The flattening round-trips losslessly.
 */
struct GaitParams {
  int n_joints = 0;
  int order = 0;  ///< highest harmonic K
  Eigen::VectorXd coefficients;

  int block_size() const { return 2 * order + 1; }
  int dim() const { return n_joints * block_size(); }

  double a0(int joint) const { return coefficients(joint * block_size()); }
  double a(int joint, int k) const { return coefficients(joint * block_size() + 2 * k - 1); }
  double b(int joint, int k) const { return coefficients(joint * block_size() + 2 * k); }
  double& a0(int joint) { return coefficients(joint * block_size()); }
  double& a(int joint, int k) { return coefficients(joint * block_size() + 2 * k - 1); }
  double& b(int joint, int k) { return coefficients(joint * block_size() + 2 * k); }

  static GaitParams zeros(int n_joints, int order);
  static GaitParams from_vector(int n_joints, int order, const Eigen::VectorXd& p);

  nlohmann::json to_json() const;
  static GaitParams from_json(const nlohmann::json& j);
};

/// Evaluate r(phi) and its analytic phase derivative at an arbitrary phase.
void evaluate_gait(const GaitParams& params, double phi, Eigen::VectorXd& r, Eigen::VectorXd& rdot);

/// Sampled shape curve over one cycle on the uniform grid phi_i = 2 pi i / n.
struct ShapeTrajectory {
  Eigen::VectorXd phase;  ///< n_samples entries in [0, 2 pi)
  Eigen::MatrixXd r;      ///< n_joints x n_samples
  Eigen::MatrixXd rdot;   ///< n_joints x n_samples, per unit phase

  int n_samples() const { return static_cast<int>(phase.size()); }
  int n_joints() const { return static_cast<int>(r.rows()); }
};

/// Sample a gait on a uniform phase grid. Requires n_samples >= max(8, 8 K)
/// so the highest harmonic is resolved.
ShapeTrajectory sample_gait(const GaitParams& params, int n_samples);

/// Rotate the coefficients per harmonic so the new parameters trace the same
/// closed curve with phase advanced by dphi: r_new(phi) = r_old(phi + dphi).
GaitParams phase_shift(const GaitParams& params, double dphi);

/// d/d(dphi) of phase_shift at dphi = 0, flattened — the direction in
/// parameter space that shifts the cycle's phase without changing its curve.
Eigen::VectorXd phase_shift_generator(const GaitParams& params);

}  // namespace gaitlocus::gait
