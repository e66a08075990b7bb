#include "gaitlocus/optimizer.hpp"

#include <cmath>

#include "gaitlocus/calculus.hpp"
#include "gaitlocus/locus.hpp"

namespace gaitlocus::optimizer {

namespace {

std::pair<double, double> eval_pair(const SystemModel& model, const Eigen::VectorXd& p) {
  auto [g, s] = model.displacement_and_cost(p);
  if (!std::isfinite(g) || !std::isfinite(s)) {
    throw EvaluationFailure("non-finite functional value during optimization",
                            std::vector<double>(p.data(), p.data() + p.size()));
  }
  return {g, s};
}

/// Backtracking step along `dir` accepting on an Armijo decrease of `merit`.
/// Evaluations that throw domain errors count as rejections. Returns the
/// accepted step length, or 0 if every trial failed.
template <typename MeritFn>
double backtrack(const MeritFn& merit, double merit0, double slope, double step0, int max_halvings) {
  double step = step0;
  for (int i = 0; i < max_halvings; ++i) {
    bool ok = true;
    double value = 0.0;
    try {
      value = merit(step);
    } catch (const Error&) {
      ok = false;
    }
    if (ok && value <= merit0 + 1e-4 * step * slope) return step;
    step *= 0.5;
  }
  return 0.0;
}

/// Central differences with the step shrunk when probes leave the evaluable
/// domain (iterates may walk close to a parameter-domain boundary).
ModelGradients robust_gradients(const SystemModel& model, const Eigen::VectorXd& p, double base) {
  double h = calculus::fd_step(p, base);
  for (int attempt = 0; attempt < 12; ++attempt, h *= 0.5) {
    try {
      return model_gradients(model, p, h);
    } catch (const Error&) {
      if (attempt == 11) throw;
    }
  }
  throw EvaluationFailure("gradient evaluation failed at every step size",
                          std::vector<double>(p.data(), p.data() + p.size()));
}

}  // namespace

OptimizerReport find_max_efficiency_gait(const SystemModel& model, const Eigen::VectorXd& p_init,
                                         const OptimizerOptions& opts) {
  auto [g0, s0] = eval_pair(model, p_init);
  if (!(g0 > 0.0)) {
    throw InvalidSeed("find_max_efficiency_gait requires g(p_init) > 0, got g = " +
                          std::to_string(g0),
                      0.0, "unclassified");
  }

  OptimizerReport report;
  report.p = p_init;
  report.displacement = g0;
  report.cost = s0;

  double step_scale = opts.initial_step;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const ModelGradients grads = robust_gradients(model, report.p, opts.fd_gradient_step);
    const double ratio = report.displacement / report.cost;
    const Eigen::VectorXd field = grads.g - ratio * grads.s;
    report.gradient_norm = field.norm();
    report.iterations = iter;
    if (report.gradient_norm <= opts.field_tol) {
      report.converged = true;
      return report;
    }

    // Ascent on g/s; the field is s * grad(g/s), so the directional slope of
    // -g/s along the field is -|field|^2 / s.
    const Eigen::VectorXd dir = field / report.gradient_norm;
    const auto merit = [&](double t) {
      auto [g, s] = eval_pair(model, report.p + t * dir);
      if (!(s > 0.0)) throw InvalidArgument("non-positive cost during line search");
      return -g / s;
    };
    const double merit0 = -ratio;
    const double slope = -report.gradient_norm / report.cost;
    const double taken = backtrack(merit, merit0, slope, step_scale, 40);
    if (taken <= 0.0) break;  // no admissible step; at the noise floor
    report.p += taken * dir;
    std::tie(report.displacement, report.cost) = eval_pair(model, report.p);
    step_scale = (taken == step_scale) ? std::min(step_scale * 1.5, 4.0 * opts.initial_step)
                                       : std::max(taken, 1e-8);
  }

  const ModelGradients grads = robust_gradients(model, report.p, opts.fd_gradient_step);
  const double ratio = report.displacement / report.cost;
  report.gradient_norm = (grads.g - ratio * grads.s).norm();
  report.converged = report.gradient_norm <= opts.field_tol;
  return report;
}

OptimizerReport solve_constrained(const SystemModel& model, double g_c,
                                  const Eigen::VectorXd& p_init, const OptimizerOptions& opts) {
  OptimizerReport report;
  report.p = p_init;
  std::tie(report.displacement, report.cost) = eval_pair(model, report.p);

  const double tol_g = opts.constraint_tol * (1.0 + std::abs(g_c));
  double rho = opts.penalty;
  double lambda = 0.0;
  {
    const ModelGradients grads = robust_gradients(model, report.p, opts.fd_gradient_step);
    if (grads.g.norm() > 1e-12) lambda = locus::optimal_lambda(grads.s, grads.g);
  }

  int total_inner = 0;
  double previous_violation = std::abs(report.displacement - g_c);
  int stalled_outers = 0;

  for (int outer = 0; outer < opts.max_outer; ++outer) {
    // Inner: minimize the augmented Lagrangian s - lambda (g-g_c) + rho/2 (g-g_c)^2.
    // Gradient steps alone crawl on the ill-conditioned Fourier spaces, so
    // each iteration tries a clamped Newton step on the inner Hessian first
    // and falls back to the damped gradient flow.
    double step_scale = opts.initial_step;
    for (int inner = 0; inner < opts.max_inner; ++inner, ++total_inner) {
      const ModelGradients grads = robust_gradients(model, report.p, opts.fd_gradient_step);
      const double c = report.displacement - g_c;
      const Eigen::VectorXd grad_al = grads.s - lambda * grads.g + rho * c * grads.g;
      const double grad_norm = grad_al.norm();
      const double inner_tol =
          std::max(0.1 * opts.stationarity_tol_scale * (1.0 + std::abs(report.cost)),
                   1e-9 * (1.0 + std::abs(report.cost)));
      if (grad_norm <= inner_tol) break;

      const auto merit_at = [&](const Eigen::VectorXd& q) {
        auto [g, s] = eval_pair(model, q);
        const double cc = g - g_c;
        return s - lambda * cc + 0.5 * rho * cc * cc;
      };
      const double merit0 = report.cost - lambda * c + 0.5 * rho * c * c;

      bool accepted = false;
      try {
        const ModelHessians hess = model_hessians(
            model, report.p, calculus::fd_step(report.p, 10.0 * opts.fd_gradient_step));
        Eigen::MatrixXd Hal = hess.s + (rho * c - lambda) * hess.g +
                              rho * grads.g * grads.g.transpose();
        Hal = 0.5 * (Hal + Hal.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Hal);
        const double floor = 1e-8 * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
        Eigen::VectorXd delta = Eigen::VectorXd::Zero(report.p.size());
        for (int i = 0; i < eig.eigenvalues().size(); ++i) {
          const double denom = std::max(std::abs(eig.eigenvalues()(i)), floor);
          delta -= (eig.eigenvectors().col(i).dot(grad_al) / denom) * eig.eigenvectors().col(i);
        }
        double t = 1.0;
        for (int trial = 0; trial < 8 && !accepted; ++trial, t *= 0.5) {
          try {
            const Eigen::VectorXd q = report.p + t * delta;
            if (merit_at(q) <= merit0 - 1e-4 * t * grad_norm * std::min(1.0, delta.norm())) {
              report.p = q;
              accepted = true;
            }
          } catch (const Error&) {
          }
        }
      } catch (const Error&) {
      }

      if (!accepted) {
        const Eigen::VectorXd dir = -grad_al / grad_norm;
        const auto merit = [&](double t) { return merit_at(report.p + t * dir); };
        const double taken = backtrack(merit, merit0, -grad_norm, step_scale, 40);
        if (taken <= 0.0) break;
        report.p += taken * dir;
        step_scale = (taken == step_scale) ? std::min(step_scale * 1.5, 4.0 * opts.initial_step)
                                           : std::max(taken, 1e-8);
      }
      std::tie(report.displacement, report.cost) = eval_pair(model, report.p);
    }

    const double violation = std::abs(report.displacement - g_c);
    lambda -= rho * (report.displacement - g_c);

    // Convergence check on the true optimality system.
    const ModelGradients grads = robust_gradients(model, report.p, opts.fd_gradient_step);
    report.gradient_norm = (grads.s - lambda * grads.g).norm();
    report.iterations = total_inner;
    const double tol_stat = opts.stationarity_tol_scale * (1.0 + std::abs(report.cost));
    if (report.gradient_norm <= tol_stat && violation <= tol_g) {
      report.converged = true;
      return report;
    }

    // Penalty escalation when the violation is not contracting.
    if (violation > 0.25 * previous_violation && violation > tol_g) {
      rho = std::min(rho * 2.0, opts.penalty_cap);
      ++stalled_outers;
    } else {
      stalled_outers = 0;
    }
    if (rho >= opts.penalty_cap && stalled_outers >= 3 && violation > 100.0 * tol_g) {
      throw InfeasibleConstraint(
          "constraint level g_c = " + std::to_string(g_c) +
          " appears unreachable: violation stalled at " + std::to_string(violation) +
          " with saturated penalty");
    }
    previous_violation = violation;
  }
  return report;  // converged = false
}

}  // namespace gaitlocus::optimizer
