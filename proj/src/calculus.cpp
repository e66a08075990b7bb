#include "gaitlocus/calculus.hpp"

#include <cmath>
#include <sstream>

namespace gaitlocus::calculus {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& p) {
  return std::vector<double>(p.data(), p.data() + p.size());
}

std::string point_string(const Eigen::VectorXd& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p(i);
  os << ")";
  return os.str();
}

double probe(const ScalarField& f, const Eigen::VectorXd& p) {
  const double v = f(p);
  if (!std::isfinite(v)) {
    throw EvaluationFailure("non-finite field value at probe point " + point_string(p), to_std(p));
  }
  return v;
}

}  // namespace

double fd_step(const Eigen::VectorXd& p, double base) {
  const double scale = p.size() ? p.cwiseAbs().maxCoeff() : 0.0;
  return base * std::max(1.0, scale);
}

Eigen::VectorXd gradient(const ScalarField& f, const Eigen::VectorXd& p, double h) {
  if (h <= 0.0) throw InvalidArgument("gradient: step h must be positive");
  const int n = static_cast<int>(p.size());
  Eigen::VectorXd g(n);
  Eigen::VectorXd q = p;
  for (int i = 0; i < n; ++i) {
    q(i) = p(i) + h;
    const double fp = probe(f, q);
    q(i) = p(i) - h;
    const double fm = probe(f, q);
    q(i) = p(i);
    g(i) = (fp - fm) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd hessian(const ScalarField& f, const Eigen::VectorXd& p, double h) {
  if (h <= 0.0) throw InvalidArgument("hessian: step h must be positive");
  const int n = static_cast<int>(p.size());
  Eigen::MatrixXd H(n, n);
  const double f0 = probe(f, p);
  Eigen::VectorXd q = p;
  for (int i = 0; i < n; ++i) {
    q(i) = p(i) + h;
    const double fp = probe(f, q);
    q(i) = p(i) - h;
    const double fm = probe(f, q);
    q(i) = p(i);
    H(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q(i) = p(i) + h; q(j) = p(j) + h;
      const double fpp = probe(f, q);
      q(j) = p(j) - h;
      const double fpm = probe(f, q);
      q(i) = p(i) - h; q(j) = p(j) + h;
      const double fmp = probe(f, q);
      q(j) = p(j) - h;
      const double fmm = probe(f, q);
      q(i) = p(i); q(j) = p(j);
      const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      H(i, j) = v;
      H(j, i) = v;
    }
  }
  return H;
}

SvdData svd_right(const Eigen::MatrixXd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  return SvdData{svd.singularValues(), svd.matrixV()};
}

NullBasis null_basis_from_svd(const SvdData& svd, double tol) {
  const int n = static_cast<int>(svd.v.cols());
  const int n_sigma = static_cast<int>(svd.singular_values.size());
  const double sigma_max = svd.sigma_max();
  if (sigma_max == 0.0) {
    // Rank zero: the whole space is null.
    return NullBasis{Eigen::MatrixXd::Identity(n, n), tol};
  }
  int rank = 0;
  for (int i = 0; i < n_sigma; ++i) {
    if (svd.singular_values(i) > tol * sigma_max) ++rank;
  }
  NullBasis basis;
  basis.tolerance = tol;
  basis.columns = svd.v.rightCols(n - rank);
  return basis;
}

NullBasis null_space(const Eigen::MatrixXd& M, double tol) {
  if (tol <= 0.0) throw InvalidArgument("null_space: tolerance must be positive");
  return null_basis_from_svd(svd_right(M), tol);
}

Eigen::VectorXd rk4_step(const VectorField& field, const Eigen::VectorXd& p, double step) {
  const Eigen::VectorXd k1 = field(p);
  const Eigen::VectorXd k2 = field(p + 0.5 * step * k1);
  const Eigen::VectorXd k3 = field(p + 0.5 * step * k2);
  const Eigen::VectorXd k4 = field(p + step * k3);
  return p + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<Eigen::VectorXd> integrate_flow(const VectorField& field, const Eigen::VectorXd& p0,
                                            double step, const StopPredicate& stop, int max_steps) {
  if (step <= 0.0) throw InvalidArgument("integrate_flow: step must be positive");
  if (max_steps < 1) throw InvalidArgument("integrate_flow: max_steps must be >= 1");

  std::vector<Eigen::VectorXd> states;
  states.push_back(p0);
  if (stop(p0)) return states;

  int step_index = 0;
  const VectorField checked = [&](const Eigen::VectorXd& q) {
    Eigen::VectorXd v = field(q);
    if (!v.allFinite()) {
      throw IntegrationFailure("non-finite field value at step " + std::to_string(step_index),
                               step_index);
    }
    return v;
  };

  Eigen::VectorXd p = p0;
  for (step_index = 0; step_index < max_steps; ++step_index) {
    p = rk4_step(checked, p, step);
    states.push_back(p);
    if (stop(p)) break;
  }
  return states;
}

}  // namespace gaitlocus::calculus
