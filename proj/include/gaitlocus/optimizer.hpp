#pragma once

#include "gaitlocus/system_model.hpp"

namespace gaitlocus::optimizer {

struct OptimizerOptions {
  double fd_gradient_step = 1e-4;
  double field_tol = 1e-6;    ///< stop when the flow field norm drops below this
  int max_iters = 5000;
  double initial_step = 0.25;

  // Constrained solve (augmented Lagrangian).
  double penalty = 10.0;             ///< initial rho
  double penalty_cap = 1e7;
  double constraint_tol = 1e-8;      ///< |g - g_c| <= tol * (1 + |g_c|)
  double stationarity_tol_scale = 1e-6;  ///< |grad s - lambda grad g| <= scale * (1 + |s|)
  int max_outer = 40;
  int max_inner = 400;
};

struct OptimizerReport {
  Eigen::VectorXd p;
  int iterations = 0;
  double gradient_norm = 0.0;  ///< final flow-field / Lagrangian-gradient norm
  bool converged = false;
  double displacement = 0.0;
  double cost = 0.0;
  double efficiency() const { return cost != 0.0 ? displacement / cost : 0.0; }
};

/// Flow along grad_g - (g/s) grad_s with adaptive step halving until the
/// field norm meets field_tol. Requires g(p_init) > 0 so the efficiency ratio
/// is well defined; otherwise throws InvalidSeed.
OptimizerReport find_max_efficiency_gait(const SystemModel& model, const Eigen::VectorXd& p_init,
                                         const OptimizerOptions& opts = {});

/// Minimize s subject to g = g_c by an augmented-Lagrangian flow: inner
/// descent along -(grad s - lambda grad g) + penalty restoration, outer
/// multiplier update lambda <- lambda - rho (g - g_c). Throws
/// InfeasibleConstraint when the constraint violation stalls at a level the
/// penalty cannot reduce.
OptimizerReport solve_constrained(const SystemModel& model, double g_c,
                                  const Eigen::VectorXd& p_init,
                                  const OptimizerOptions& opts = {});

}  // namespace gaitlocus::optimizer
