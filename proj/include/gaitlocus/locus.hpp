#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaitlocus/calculus.hpp"
#include "gaitlocus/system_model.hpp"

namespace gaitlocus::locus {

enum class Classification { minimizer, maximizer, saddle, indeterminate };
enum class StopReason {
  min_displacement_reached,
  lost_minimizer,
  singular_null_space,
  joint_limit,
  max_steps
};

const char* to_string(Classification c);
const char* to_string(StopReason r);

struct LocusOptions {
  double fd_gradient_step = 1e-4;  ///< base; scaled by max(1, |p|_inf)
  double fd_hessian_step = 1e-3;
  double null_tol = 1e-6;          ///< relative singular-value cutoff
  double rk_step = 1e-2;           ///< arclength step in parameter space
  double min_displacement = 0.0;   ///< absolute stop level for g
  int max_steps = 10000;
  bool corrector = true;           ///< re-polish stationarity after each step
  int corrector_max_iters = 25;
  int polish_max_iters = 200;      ///< seed polish budget
  double stationarity_tol_scale = 1e-6;  ///< tol = scale * (1 + |s|)
  double classify_eig_tol = 1e-7;
  double stall_tol = 1e-10;        ///< |projected step| below this means stalled
  bool reverse_direction = false;  ///< trace toward increasing g instead
  /// Where stationary branches exchange stability (e.g. a symmetry-breaking
  /// pitchfork along the family), discrete steps can land in a thin
  /// non-minimizer zone. Allow this many unrecorded bridging steps before
  /// declaring the minimizer family lost.
  int recovery_steps = 12;
};

/// One point of the optimal locus: parameters, multiplier, functional values,
/// stationarity residual, and second-derivative classification.
struct ContinuationState {
  Eigen::VectorXd p;
  double lambda = 0.0;
  double displacement = 0.0;  ///< g at p — the constraint level this point represents
  double cost = 0.0;
  double efficiency = 0.0;    ///< g / s
  double grad_L_norm = 0.0;   ///< |grad s - lambda grad g|
  Classification classification = Classification::indeterminate;
};

struct LocusTrace {
  std::vector<ContinuationState> states;
  StopReason stop_reason = StopReason::max_steps;
  std::string stop_detail;  ///< human-readable cause for logs and CLI errors
};

/// Least-squares multiplier lambda* = (grad_g . grad_s) / |grad_g|^2; the
/// residual grad_s - lambda* grad_g is orthogonal to grad_g at every p.
double optimal_lambda(const Eigen::VectorXd& grad_s, const Eigen::VectorXd& grad_g);

/// Gradient of lambda*(p):
///   (1/|grad g|^2)(hess_g grad_s + hess_s grad_g)
///   - (2/|grad g|^4)(hess_g grad_g)(grad_g . grad_s).
Eigen::VectorXd lambda_gradient(const SystemModel& model, const Eigen::VectorXd& p,
                                const LocusOptions& opts = {});

/// Hessian of the Lagrangian with lambda*(p) substituted:
///   H = hess_s - lambda* hess_g - grad_g (grad lambda*)^T,
/// stored as written (generally nonsymmetric).
Eigen::MatrixXd lagrangian_hessian(const SystemModel& model, const Eigen::VectorXd& p,
                                   const LocusOptions& opts = {});

/// [[0, grad_g^T], [grad_g, hess_s - lambda hess_g]] with the symmetric
/// constrained Hessian block.
Eigen::MatrixXd bordered_hessian(const SystemModel& model, const Eigen::VectorXd& p, double lambda,
                                 const LocusOptions& opts = {});

/// Continuation direction: -grad_g projected onto the null space of the
/// Lagrangian Hessian. Throws SingularNullSpace when the null space is empty
/// and StalledProjection when only gauge directions remain.
Eigen::VectorXd locus_step(const SystemModel& model, const Eigen::VectorXd& p,
                           const LocusOptions& opts = {});

/// Constrained second-derivative test: definiteness of hess_s - lambda hess_g
/// restricted to the tangent space { v : grad_g . v = 0 }, with any model
/// gauge directions projected out. Requires the point to be approximately
/// stationary. Eigenvalues within +-classify_eig_tol of zero give
/// `indeterminate`.
Classification classify_stationary(const SystemModel& model, const Eigen::VectorXd& p,
                                   double lambda, const LocusOptions& opts = {});

/// Restore stationarity: damped Gauss-Newton on grad L(p) = 0 with a
/// gradient-flow fallback. When g_pin is given the displacement level is
/// solved jointly (grad L = 0, g = g_pin), which keeps correction from
/// sliding along the locus.
struct PolishResult {
  Eigen::VectorXd p;
  double grad_L_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};
PolishResult polish_stationary(const SystemModel& model, const Eigen::VectorXd& p,
                               const LocusOptions& opts, int max_iters,
                               std::optional<double> g_pin = {});

/**
 * Trace the family of step-optimal gaits from a stationary minimizer seed:
 * RK4 flow of the unit-speed continuation field with an optional corrector
 * re-polishing stationarity after each step. Records one ContinuationState
 * per accepted point; g is monotone along the trace (decreasing unless
 * reverse_direction). Stops at min_displacement, a non-minimizer point, a
 * singular/stalled projection, a joint-limit violation, or max_steps.
 */
LocusTrace trace_locus(const SystemModel& model, const Eigen::VectorXd& seed,
                       const LocusOptions& opts);

}  // namespace gaitlocus::locus
