#include "gaitlocus/locus.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "gaitlocus/optimizer.hpp"

namespace gaitlocus::locus {

namespace {

constexpr double kDegenerateGradNorm = 1e-12;

const char* kClassificationNames[] = {"minimizer", "maximizer", "saddle", "indeterminate"};
const char* kStopReasonNames[] = {"min_displacement_reached", "lost_minimizer",
                                  "singular_null_space", "joint_limit", "max_steps"};

std::pair<double, double> eval_pair(const SystemModel& model, const Eigen::VectorXd& p) {
  auto [g, s] = model.displacement_and_cost(p);
  if (!std::isfinite(g) || !std::isfinite(s)) {
    throw EvaluationFailure("non-finite functional value during locus evaluation",
                            std::vector<double>(p.data(), p.data() + p.size()));
  }
  return {g, s};
}

/// First-order data at a point: functional values, gradients, multiplier, and
/// the Lagrangian-gradient residual.
struct PointEval {
  double g = 0.0, s = 0.0;
  Eigen::VectorXd grad_g, grad_s;
  double lambda = 0.0;
  Eigen::VectorXd residual;  ///< grad_s - lambda grad_g
  double residual_norm = 0.0;
};

PointEval evaluate_point(const SystemModel& model, const Eigen::VectorXd& p,
                         const LocusOptions& opts) {
  PointEval e;
  std::tie(e.g, e.s) = eval_pair(model, p);
  const double h = calculus::fd_step(p, opts.fd_gradient_step);
  const ModelGradients grads = model_gradients(model, p, h);
  e.grad_g = grads.g;
  e.grad_s = grads.s;
  e.lambda = optimal_lambda(e.grad_s, e.grad_g);
  e.residual = e.grad_s - e.lambda * e.grad_g;
  e.residual_norm = e.residual.norm();
  return e;
}

double stationarity_tol(const LocusOptions& opts, double s) {
  return opts.stationarity_tol_scale * (1.0 + std::abs(s));
}

Eigen::VectorXd lambda_gradient_from(const PointEval& e, const ModelHessians& hess) {
  const double gg = e.grad_g.squaredNorm();
  if (gg <= kDegenerateGradNorm * kDegenerateGradNorm) {
    throw DegenerateConstraint("lambda gradient undefined: |grad g| ~ 0");
  }
  const Eigen::VectorXd term1 = (hess.g * e.grad_s + hess.s * e.grad_g) / gg;
  const double gs = e.grad_g.dot(e.grad_s);
  const Eigen::VectorXd term2 = (2.0 / (gg * gg)) * (hess.g * e.grad_g) * gs;
  return term1 - term2;
}

Eigen::MatrixXd lagrangian_hessian_from(const PointEval& e, const ModelHessians& hess) {
  const Eigen::VectorXd dlambda = lambda_gradient_from(e, hess);
  return hess.s - e.lambda * hess.g - e.grad_g * dlambda.transpose();
}

/// Estimated absolute FD noise floor on Hessian entries (round-off / h^2).
double hessian_noise_floor(const PointEval& e, double h) {
  const double f_scale = std::max({1.0, std::abs(e.s), std::abs(e.lambda * e.g)});
  return 4.0 * std::numeric_limits<double>::epsilon() * f_scale / (h * h);
}

Eigen::VectorXd project_onto_null(const calculus::NullBasis& basis, const PointEval& e,
                                  const LocusOptions& opts) {
  if (basis.empty()) {
    throw SingularNullSpace("Lagrangian Hessian has no null direction at tolerance " +
                            std::to_string(basis.tolerance));
  }
  const Eigen::VectorXd step = basis.columns * (basis.columns.transpose() * (-e.grad_g));
  if (step.norm() < opts.stall_tol) {
    throw StalledProjection("projected continuation step vanished (only trivial null directions)");
  }
  return step;
}

Eigen::VectorXd locus_step_from(const PointEval& e, const ModelHessians& hess,
                                const Eigen::VectorXd& p, const LocusOptions& opts) {
  const Eigen::MatrixXd H = lagrangian_hessian_from(e, hess);
  const calculus::SvdData svd = calculus::svd_right(H);

  // Widen the cutoff to at least 10x the FD noise so differencing error does
  // not spawn spurious null directions.
  const double h = calculus::fd_step(p, opts.fd_hessian_step);
  double tol = opts.null_tol;
  if (svd.sigma_max() > 0.0) {
    tol = std::max(tol, 10.0 * hessian_noise_floor(e, h) / svd.sigma_max());
  }
  return project_onto_null(calculus::null_basis_from_svd(svd, tol), e, opts);
}

/**
 * Continuation-stage variant. Working points sit slightly off the stationary
 * manifold (corrector tolerance, predictor stages), which lifts the tangent
 * singular value off zero by more than any fixed threshold tracks reliably.
 * The block always holds the 1 + n_gauge smallest directions, and widens to
 * every direction below a soft-mode cap so the projection can rotate onto an
 * emerging branch where stationary curves meet (the projection weights each
 * direction by its actual overlap with -grad g, so extra members with little
 * overlap are harmless and the corrector absorbs their off-manifold drift).
 */
Eigen::VectorXd locus_step_block(const SystemModel& model, const PointEval& e,
                                 const ModelHessians& hess, const Eigen::VectorXd& p,
                                 const LocusOptions& opts) {
  constexpr double kSoftModeCap = 3e-3;  // relative to sigma_max
  const Eigen::MatrixXd H = lagrangian_hessian_from(e, hess);
  const calculus::SvdData svd = calculus::svd_right(H);
  const int n = static_cast<int>(p.size());
  int n_gauge = 0;
  for (const Eigen::VectorXd& t : model.gauge_directions(p)) {
    if (t.norm() > 0.0) ++n_gauge;
  }
  int k = std::min(n, 1 + n_gauge);
  if (n <= k || svd.sigma_max() == 0.0) {
    calculus::NullBasis all{Eigen::MatrixXd::Identity(n, n), 1.0};
    return project_onto_null(all, e, opts);
  }
  while (k < n && svd.singular_values(n - k - 1) <= kSoftModeCap * svd.sigma_max()) ++k;
  calculus::NullBasis basis;
  basis.tolerance = svd.singular_values(n - k) / svd.sigma_max();
  basis.columns = svd.v.rightCols(k);
  return project_onto_null(basis, e, opts);
}

Classification classify_from(const SystemModel& model, const Eigen::VectorXd& p, double lambda,
                             const PointEval& e, const ModelHessians& hess,
                             const LocusOptions& opts) {
  const int n = static_cast<int>(p.size());
  if (e.grad_g.norm() <= kDegenerateGradNorm) {
    throw DegenerateConstraint("classification undefined: |grad g| ~ 0");
  }

  // Tangent space of the constraint, with gauge directions projected out so
  // their noise-level eigenvalues cannot flip the verdict.
  std::vector<Eigen::VectorXd> rows;
  rows.push_back(e.grad_g.normalized());
  for (const Eigen::VectorXd& t : model.gauge_directions(p)) {
    if (t.norm() > 0.0) rows.push_back(t.normalized());
  }
  Eigen::MatrixXd C(static_cast<int>(rows.size()), n);
  for (int i = 0; i < C.rows(); ++i) C.row(i) = rows[static_cast<size_t>(i)].transpose();
  const calculus::NullBasis tangent = calculus::null_space(C, 1e-10);
  if (tangent.empty()) return Classification::minimizer;  // isolated feasible point

  const Eigen::MatrixXd constrained = hess.s - lambda * hess.g;
  Eigen::MatrixXd restricted =
      tangent.columns.transpose() * constrained * tangent.columns;
  restricted = 0.5 * (restricted + restricted.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& mu = eig.eigenvalues();
  const double tol = opts.classify_eig_tol;
  bool any_near_zero = false, any_positive = false, any_negative = false;
  for (int i = 0; i < mu.size(); ++i) {
    if (std::abs(mu(i)) < tol) {
      any_near_zero = true;
    } else if (mu(i) > 0.0) {
      any_positive = true;
    } else {
      any_negative = true;
    }
  }
  if (any_near_zero) return Classification::indeterminate;
  if (any_positive && any_negative) return Classification::saddle;
  return any_positive ? Classification::minimizer : Classification::maximizer;
}

}  // namespace

const char* to_string(Classification c) { return kClassificationNames[static_cast<int>(c)]; }
const char* to_string(StopReason r) { return kStopReasonNames[static_cast<int>(r)]; }

double optimal_lambda(const Eigen::VectorXd& grad_s, const Eigen::VectorXd& grad_g) {
  const double gg = grad_g.squaredNorm();
  if (grad_g.norm() <= kDegenerateGradNorm) {
    throw DegenerateConstraint("optimal_lambda undefined: |grad g| <= 1e-12");
  }
  return grad_g.dot(grad_s) / gg;
}

Eigen::VectorXd lambda_gradient(const SystemModel& model, const Eigen::VectorXd& p,
                                const LocusOptions& opts) {
  const PointEval e = evaluate_point(model, p, opts);
  const ModelHessians hess =
      model_hessians(model, p, calculus::fd_step(p, opts.fd_hessian_step));
  return lambda_gradient_from(e, hess);
}

Eigen::MatrixXd lagrangian_hessian(const SystemModel& model, const Eigen::VectorXd& p,
                                   const LocusOptions& opts) {
  const PointEval e = evaluate_point(model, p, opts);
  const ModelHessians hess =
      model_hessians(model, p, calculus::fd_step(p, opts.fd_hessian_step));
  return lagrangian_hessian_from(e, hess);
}

Eigen::MatrixXd bordered_hessian(const SystemModel& model, const Eigen::VectorXd& p, double lambda,
                                 const LocusOptions& opts) {
  const int n = static_cast<int>(p.size());
  const PointEval e = evaluate_point(model, p, opts);
  const ModelHessians hess =
      model_hessians(model, p, calculus::fd_step(p, opts.fd_hessian_step));
  Eigen::MatrixXd B(n + 1, n + 1);
  B(0, 0) = 0.0;
  B.block(0, 1, 1, n) = e.grad_g.transpose();
  B.block(1, 0, n, 1) = e.grad_g;
  B.block(1, 1, n, n) = hess.s - lambda * hess.g;
  return B;
}

Eigen::VectorXd locus_step(const SystemModel& model, const Eigen::VectorXd& p,
                           const LocusOptions& opts) {
  const PointEval e = evaluate_point(model, p, opts);
  const ModelHessians hess =
      model_hessians(model, p, calculus::fd_step(p, opts.fd_hessian_step));
  return locus_step_from(e, hess, p, opts);
}

Classification classify_stationary(const SystemModel& model, const Eigen::VectorXd& p,
                                   double lambda, const LocusOptions& opts) {
  const PointEval e = evaluate_point(model, p, opts);
  const double tol = stationarity_tol(opts, e.s);
  if (e.residual_norm > 10.0 * tol) {
    std::ostringstream os;
    os << "classify_stationary precondition violated: |grad L| = " << e.residual_norm
       << " exceeds stationarity tolerance " << tol;
    throw InvalidArgument(os.str());
  }
  const ModelHessians hess =
      model_hessians(model, p, calculus::fd_step(p, opts.fd_hessian_step));
  return classify_from(model, p, lambda, e, hess, opts);
}

namespace {

/// Damped gradient-flow step along -grad L with lambda frozen, Cauchy step
/// length and Armijo backtracking on the merit s - lambda g. Returns false
/// when no admissible step exists (FD noise floor).
bool flow_step(const SystemModel& model, const LocusOptions& opts, const PointEval& e,
               Eigen::VectorXd& p) {
  const Eigen::VectorXd dir = -e.residual / e.residual_norm;
  const double merit0 = e.s - e.lambda * e.g;
  const double hc = calculus::fd_step(p, opts.fd_hessian_step);
  const auto merit_at = [&](double t) {
    auto [g, s] = eval_pair(model, p + t * dir);
    return s - e.lambda * g;
  };
  double curv = 0.0;
  try {
    curv = (merit_at(hc) - 2.0 * merit0 + merit_at(-hc)) / (hc * hc);
  } catch (const Error&) {
    curv = 0.0;
  }
  double step = std::min((curv > 0.0) ? e.residual_norm / curv : opts.rk_step, 1.0);
  for (int halving = 0; halving < 30; ++halving) {
    double merit_trial;
    try {
      merit_trial = merit_at(step);
    } catch (const Error&) {
      step *= 0.5;
      continue;
    }
    if (merit_trial <= merit0 - 1e-4 * step * e.residual_norm) {
      p += step * dir;
      return true;
    }
    step *= 0.5;
  }
  return false;
}

}  // namespace

PolishResult polish_stationary(const SystemModel& model, const Eigen::VectorXd& p,
                               const LocusOptions& opts, int max_iters,
                               std::optional<double> g_pin) {
  PolishResult result;
  result.p = p;

  const auto level_tol = [&](double g) {
    return 1e-8 * (1.0 + std::abs(g));
  };
  const auto is_converged = [&](const PointEval& e) {
    if (e.residual_norm > stationarity_tol(opts, e.s)) return false;
    return !g_pin || std::abs(e.g - *g_pin) <= level_tol(*g_pin);
  };
  // Joint residual: stationarity plus (optionally) the displacement level.
  const auto joint_norm = [&](const PointEval& e) {
    const double level = g_pin ? (e.g - *g_pin) : 0.0;
    return std::sqrt(e.residual_norm * e.residual_norm + level * level);
  };

  if (max_iters < 1) {
    const PointEval e = evaluate_point(model, result.p, opts);
    result.grad_L_norm = e.residual_norm;
    result.converged = is_converged(e);
    return result;
  }

  for (int iter = 0; iter < max_iters; ++iter) {
    PointEval e = evaluate_point(model, result.p, opts);
    result.grad_L_norm = e.residual_norm;
    result.iterations = iter;
    if (is_converged(e)) {
      result.converged = true;
      return result;
    }

    // Damped Gauss-Newton on the system (grad L(p), g(p) - g_pin) = 0. The
    // Jacobian rows are the Lagrangian Hessian (exact Jacobian of grad L)
    // and grad g. H is singular along the family tangent and gauge
    // directions; Levenberg damping of the pseudo-inverse suppresses those
    // components, and the pinned level keeps the correction from sliding
    // along the locus. Plain damped flow stalls short of the stationarity
    // tolerance on the ill-conditioned Fourier spaces.
    bool accepted = false;
    try {
      const int n = static_cast<int>(result.p.size());
      const ModelHessians hess =
          model_hessians(model, result.p, calculus::fd_step(result.p, opts.fd_hessian_step));
      const Eigen::MatrixXd H = lagrangian_hessian_from(e, hess);
      const int rows = g_pin ? n + 1 : n;
      Eigen::MatrixXd J(rows, n);
      Eigen::VectorXd R(rows);
      J.topRows(n) = H;
      R.head(n) = e.residual;
      if (g_pin) {
        J.row(n) = e.grad_g.transpose();
        R(n) = e.g - *g_pin;
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Eigen::VectorXd& sig = svd.singularValues();
      const double sig0 = sig(0);
      const Eigen::VectorXd coeffs = svd.matrixU().transpose() * R;
      const double norm0 = joint_norm(e);
      double best_norm = norm0;
      Eigen::VectorXd best_p = result.p;
      for (double damping : {1e-7, 1e-5, 1e-3, 1e-2, 1e-1}) {
        const double mu = damping * sig0;
        Eigen::VectorXd delta = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < sig.size(); ++i) {
          delta -= (sig(i) / (sig(i) * sig(i) + mu * mu)) * coeffs(i) * svd.matrixV().col(i);
        }
        try {
          const PointEval trial_eval = evaluate_point(model, result.p + delta, opts);
          const double trial_norm = joint_norm(trial_eval);
          if (trial_norm < best_norm) {
            best_norm = trial_norm;
            best_p = result.p + delta;
          }
        } catch (const Error&) {
          // trial left the evaluable region; raise the damping
        }
      }
      if (best_norm < 0.99 * norm0) {
        result.p = best_p;
        accepted = true;
      }
    } catch (const DegenerateConstraint&) {
      // fall through to the flow step
    }

    if (!accepted && !flow_step(model, opts, e, result.p)) break;
  }
  const PointEval e = evaluate_point(model, result.p, opts);
  result.grad_L_norm = e.residual_norm;
  result.converged = is_converged(e);
  return result;
}

LocusTrace trace_locus(const SystemModel& model, const Eigen::VectorXd& seed,
                       const LocusOptions& opts) {
  if (opts.rk_step <= 0.0) throw InvalidArgument("trace_locus: rk_step must be positive");
  if (opts.max_steps < 1) throw InvalidArgument("trace_locus: max_steps must be >= 1");

  // Constrained solve used as the corrector: restore stationarity on the
  // fixed displacement level set, warm-started from the predicted point.
  optimizer::OptimizerOptions corrector_opts;
  corrector_opts.fd_gradient_step = opts.fd_gradient_step;
  corrector_opts.stationarity_tol_scale = opts.stationarity_tol_scale;
  corrector_opts.constraint_tol = 1e-7;
  corrector_opts.max_outer = 8;
  corrector_opts.max_inner = std::max(10, opts.corrector_max_iters);
  const auto correct_at_level = [&](const Eigen::VectorXd& q, double g_level) {
    return optimizer::solve_constrained(model, g_level, q, corrector_opts);
  };

  // Seeds from the unconstrained optimizer carry residual gradient; polish
  // before enforcing the stationarity precondition, holding the seed's
  // displacement level.
  const double g_seed = eval_pair(model, seed).first;
  Eigen::VectorXd seed_polished = seed;
  if (opts.polish_max_iters > 0) {
    optimizer::OptimizerOptions polish_opts = corrector_opts;
    polish_opts.max_inner = std::max(10, opts.polish_max_iters);
    try {
      const optimizer::OptimizerReport polished_report =
          optimizer::solve_constrained(model, g_seed, seed, polish_opts);
      seed_polished = polished_report.p;
    } catch (const Error&) {
      // fall through; the stationarity precondition below reports the failure
    }
  }
  const PolishResult polished =
      polish_stationary(model, seed_polished, opts, 0, g_seed);

  const auto make_state = [&](const Eigen::VectorXd& p, const PointEval& e,
                              const ModelHessians& hess) {
    ContinuationState st;
    st.p = p;
    st.lambda = e.lambda;
    st.displacement = e.g;
    st.cost = e.s;
    st.efficiency = (e.s != 0.0) ? e.g / e.s : 0.0;
    st.grad_L_norm = e.residual_norm;
    st.classification = classify_from(model, p, e.lambda, e, hess, opts);
    return st;
  };

  PointEval eval = evaluate_point(model, polished.p, opts);
  ModelHessians hess =
      model_hessians(model, polished.p, calculus::fd_step(polished.p, opts.fd_hessian_step));
  ContinuationState state = make_state(polished.p, eval, hess);

  if (state.grad_L_norm > stationarity_tol(opts, state.cost)) {
    std::ostringstream os;
    os << "seed is not stationary after polish: |grad L| = " << state.grad_L_norm
       << " (classification " << to_string(state.classification) << ")";
    throw InvalidSeed(os.str(), state.grad_L_norm, to_string(state.classification));
  }
  if (state.classification != Classification::minimizer) {
    std::ostringstream os;
    os << "seed classifies as " << to_string(state.classification)
       << ", expected minimizer (|grad L| = " << state.grad_L_norm << ")";
    throw InvalidSeed(os.str(), state.grad_L_norm, to_string(state.classification));
  }

  LocusTrace trace;
  trace.states.push_back(state);
  trace.stop_reason = StopReason::max_steps;

  const double direction_sign = opts.reverse_direction ? -1.0 : 1.0;
  const auto unit_field = [&](const Eigen::VectorXd& q) {
    const PointEval qe = evaluate_point(model, q, opts);
    const ModelHessians qh =
        model_hessians(model, q, calculus::fd_step(q, opts.fd_hessian_step));
    const Eigen::VectorXd v = locus_step_block(model, qe, qh, q, opts);
    return Eigen::VectorXd(direction_sign * v / v.norm());
  };

  Eigen::VectorXd p = polished.p;
  int recovery_left = opts.recovery_steps;
  for (int step = 0; step < opts.max_steps; ++step) {
    Eigen::VectorXd p_next;
    try {
      // First stage reuses the derivatives already computed at p.
      const Eigen::VectorXd v1 = locus_step_block(model, eval, hess, p, opts);
      const Eigen::VectorXd k1 = direction_sign * v1 / v1.norm();

      // Where branches meet, the corrector cannot converge inside a narrow
      // band around the degeneracy; lengthen the predictor step until it
      // lands beyond the band.
      bool advanced = false;
      double last_resid = 0.0;
      for (double scale = 1.0; scale <= 8.0 && !advanced; scale *= 2.0) {
        const double h = opts.rk_step * scale;
        const Eigen::VectorXd k2 = unit_field(p + 0.5 * h * k1);
        const Eigen::VectorXd k3 = unit_field(p + 0.5 * h * k2);
        const Eigen::VectorXd k4 = unit_field(p + h * k3);
        p_next = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!opts.corrector) {
          advanced = true;
          break;
        }
        // Pin the corrector to the predicted displacement level so it cannot
        // slide back along the locus.
        const double g_target = eval_pair(model, p_next).first;
        try {
          const optimizer::OptimizerReport corrected = correct_at_level(p_next, g_target);
          last_resid = corrected.gradient_norm;
          if (corrected.converged) {
            p_next = corrected.p;
            advanced = true;
          }
        } catch (const InfeasibleConstraint&) {
          // level unreachable from here; lengthen the step
        }
      }
      if (!advanced) {
        // Stationarity can no longer be restored (FD noise floor or a
        // genuine degeneracy); end the trace at the last good state.
        trace.stop_reason = StopReason::singular_null_space;
        trace.stop_detail = "corrector failed to restore stationarity (|grad L| = " +
                            std::to_string(last_resid) + ")";
        return trace;
      }
      eval = evaluate_point(model, p_next, opts);
      hess = model_hessians(model, p_next, calculus::fd_step(p_next, opts.fd_hessian_step));
    } catch (const SingularNullSpace& e) {
      trace.stop_reason = StopReason::singular_null_space;
      trace.stop_detail = e.what();
      return trace;
    } catch (const StalledProjection& e) {
      trace.stop_reason = StopReason::singular_null_space;
      trace.stop_detail = e.what();
      return trace;
    } catch (const JointLimitError& e) {
      trace.stop_reason = StopReason::joint_limit;
      trace.stop_detail = e.what();
      return trace;
    } catch (const SingularConfiguration& e) {
      trace.stop_reason = StopReason::joint_limit;
      trace.stop_detail = e.what();
      return trace;
    } catch (const InvalidArgument& e) {
      // Left the evaluable parameter domain (e.g. toy axes reached zero).
      trace.stop_reason = StopReason::joint_limit;
      trace.stop_detail = e.what();
      return trace;
    }

    const ContinuationState next = make_state(p_next, eval, hess);
    if (next.grad_L_norm > stationarity_tol(opts, next.cost)) {
      trace.stop_reason = StopReason::singular_null_space;
      trace.stop_detail = "accepted point violates stationarity (|grad L| = " +
                          std::to_string(next.grad_L_norm) + ")";
      return trace;
    }
    if (next.classification != Classification::minimizer) {
      if (recovery_left-- > 0) {
        // Bridge the thin non-minimizer zone where branches exchange
        // stability; the point is stationary but is not recorded.
        p = p_next;
        continue;
      }
      trace.stop_reason = StopReason::lost_minimizer;
      trace.stop_detail = std::string("point classifies as ") + to_string(next.classification);
      return trace;
    }
    recovery_left = opts.recovery_steps;
    const double g_prev = trace.states.back().displacement;
    const bool monotone = opts.reverse_direction ? (next.displacement > g_prev)
                                                 : (next.displacement < g_prev);
    if (!monotone) {
      trace.stop_reason = StopReason::singular_null_space;  // stalled
      trace.stop_detail = "displacement stopped advancing (g " +
                          std::to_string(g_prev) + " -> " + std::to_string(next.displacement) + ")";
      return trace;
    }
    trace.states.push_back(next);
    p = p_next;

    if (!opts.reverse_direction && next.displacement <= opts.min_displacement) {
      trace.stop_reason = StopReason::min_displacement_reached;
      trace.stop_detail = "reached the requested minimum displacement";
      return trace;
    }
  }
  return trace;  // max_steps
}

}  // namespace gaitlocus::locus
