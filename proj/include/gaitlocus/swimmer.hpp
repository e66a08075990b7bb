#pragma once

#include <string>
#include <vector>

#include "gaitlocus/gait.hpp"
#include "gaitlocus/system_model.hpp"

namespace gaitlocus::swimmer {

/// Drag-dominated N-link swimmer built from equal slender links.
struct SwimmerGeometry {
  int n_links = 3;
  double link_length = 1.0 / 3.0;  ///< per link, body lengths
  double c_long = 1.0;             ///< longitudinal drag per unit length
  double drag_ratio = 2.0;         ///< lateral / longitudinal drag
  double joint_limit = 3.0;        ///< |alpha_i| box for gait evaluations

  int shape_dim() const { return n_links - 1; }

  static SwimmerGeometry three_link() { return SwimmerGeometry{}; }
  static SwimmerGeometry four_link() {
    SwimmerGeometry g;
    g.n_links = 4;
    g.link_length = 0.25;
    return g;
  }
};

/// Local connection A(r): body velocity is slaved to shape velocity as
/// xi = -A(r) rdot, xi = (xi_x, xi_y, xi_theta) in the mean-orientation /
/// centroid body frame.
struct LocalConnection {
  Eigen::Matrix<double, 3, Eigen::Dynamic> A;
};

/// Pulled-back drag-power quadratic form on shape velocities; symmetric
/// positive definite at nonsingular shapes.
struct PowerMetric {
  Eigen::MatrixXd M;
};

/// Net rigid displacement over one cycle, expressed in the cycle-start frame.
struct GroupDisplacement {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  ///< wrapped to (-pi, pi]

  GroupDisplacement inverse() const;
  GroupDisplacement compose(const GroupDisplacement& then) const;
  double translation_norm() const;
};

/**
 * Resistive-force-theory force balance. Per-unit-length drag diag(c_long,
 * c_long * drag_ratio) integrates analytically along each link to the link
 * wrench, maps through the link Jacobians to the body frame, and total force
 * and torque zero yields the Pfaffian constraint
 *
 *   omega_xi * xi + omega_r * rdot = 0,      A = omega_xi^{-1} omega_r.
 *
 * Throws SingularConfiguration when cond(omega_xi) exceeds 1e12.
 */
LocalConnection local_connection(const SwimmerGeometry& geom, const Eigen::VectorXd& r);

/// Drag wrench on the whole body per unit body velocity (force-balance block).
Eigen::Matrix3d body_drag_matrix(const SwimmerGeometry& geom, const Eigen::VectorXd& r);

/// M(r) = [-A^T I] M_full [-A; I]: power dissipated at unit shape speed once
/// body motion is slaved to the connection.
PowerMetric power_metric(const SwimmerGeometry& geom, const Eigen::VectorXd& r);

/// Integrate xi(phi) = -A(r(phi)) rdot(phi) through SE(2) by RK4 on the pose
/// chart, with exact sample values at stage midpoints (requires an even
/// sample count). Returns cycle-end pose relative to cycle-start pose.
GroupDisplacement net_displacement(const SwimmerGeometry& geom, const gait::ShapeTrajectory& traj);

/// Metric-weighted pathlength s = closed integral of sqrt(rdot^T M(r) rdot).
double pathlength_cost(const SwimmerGeometry& geom, const gait::ShapeTrajectory& traj);

/**
 * Curvature of the connection: for each coordinate plane (i, j), i < j, the
 * exterior-derivative term of -A plus the local se(2) bracket correction,
 *
 *   F_ij = -(d_i A_j - d_j A_i) + [A_i, A_j].
 *
 * Two joints yield one plane; three joints yield planes (0,1), (0,2), (1,2).
 * The x component approximates net x displacement per unit enclosed area for
 * small gaits.
 */
std::vector<Eigen::Vector3d> constraint_curvature(const SwimmerGeometry& geom,
                                                  const Eigen::VectorXd& r);

/// Fourier-parametrized swimmer as an optimizable system. The displacement
/// functional is the x component of the net cycle displacement; the cost is
/// the metric-weighted pathlength. Gaits leaving the joint box raise
/// JointLimitError.
class SwimmerSystem : public SystemModel {
 public:
  SwimmerSystem(SwimmerGeometry geom, int fourier_order, int samples_per_cycle, std::string name);

  std::string name() const override { return name_; }
  int dimension() const override { return geom_.shape_dim() * (2 * order_ + 1); }
  double displacement(const Eigen::VectorXd& p) const override;
  double cost(const Eigen::VectorXd& p) const override;
  std::pair<double, double> displacement_and_cost(const Eigen::VectorXd& p) const override;
  std::vector<Eigen::VectorXd> gauge_directions(const Eigen::VectorXd& p) const override;

  gait::GaitParams params_from_vector(const Eigen::VectorXd& p) const;
  const SwimmerGeometry& geometry() const { return geom_; }
  int fourier_order() const { return order_; }
  int samples_per_cycle() const { return samples_; }

 private:
  SwimmerGeometry geom_;
  int order_;
  int samples_;
  std::string name_;
};

}  // namespace gaitlocus::swimmer
