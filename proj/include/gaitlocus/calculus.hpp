#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "gaitlocus/errors.hpp"

namespace gaitlocus::calculus {

using ScalarField = std::function<double(const Eigen::VectorXd&)>;
using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using StopPredicate = std::function<bool(const Eigen::VectorXd&)>;

/// Finite-difference step scaled to the magnitude of p. Gradients default to
/// 1e-4 * max(1, |p|_inf), Hessians to 1e-3 * max(1, |p|_inf).
double fd_step(const Eigen::VectorXd& p, double base);

/// Central-difference gradient, component i = (f(p+h e_i) - f(p-h e_i)) / 2h.
/// O(h^2) for C^3 fields. Throws EvaluationFailure on a non-finite probe.
Eigen::VectorXd gradient(const ScalarField& f, const Eigen::VectorXd& p, double h);

/// Hessian from second-order central stencils: 3-point on the diagonal,
/// 4-point cross stencil off it. Exactly symmetric as stored.
Eigen::MatrixXd hessian(const ScalarField& f, const Eigen::VectorXd& p, double h);

/// Orthonormal basis of the numerical null space of a matrix.
struct NullBasis {
  Eigen::MatrixXd columns;  ///< n x k, pairwise orthonormal
  double tolerance = 0.0;   ///< relative singular-value cutoff that was applied
  int dim() const { return static_cast<int>(columns.cols()); }
  bool empty() const { return columns.cols() == 0; }
};

/// Right singular vectors whose singular values satisfy sigma <= tol * sigma_max.
/// If sigma_max == 0 the whole space is returned. An empty basis is a valid result.
NullBasis null_space(const Eigen::MatrixXd& M, double tol);

/// SVD data for callers that need the spectrum along with the null basis.
struct SvdData {
  Eigen::VectorXd singular_values;  ///< descending
  Eigen::MatrixXd v;                ///< full right singular vectors, n x n
  double sigma_max() const { return singular_values.size() ? singular_values(0) : 0.0; }
};
SvdData svd_right(const Eigen::MatrixXd& M);
NullBasis null_basis_from_svd(const SvdData& svd, double tol);

/// One classical fourth-order Runge-Kutta step of an autonomous field.
Eigen::VectorXd rk4_step(const VectorField& field, const Eigen::VectorXd& p, double step);

/// Fixed-step RK4 flow. Terminates at the first state where `stop` is true
/// (checked before any step is taken) or after max_steps. Returns the visited
/// states in order, including p0. A non-finite field value raises
/// IntegrationFailure carrying the step index.
std::vector<Eigen::VectorXd> integrate_flow(const VectorField& field, const Eigen::VectorXd& p0,
                                            double step, const StopPredicate& stop, int max_steps);

}  // namespace gaitlocus::calculus
