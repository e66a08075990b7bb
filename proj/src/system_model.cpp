#include "gaitlocus/system_model.hpp"

#include <cmath>
#include <sstream>

namespace gaitlocus {

namespace {

std::pair<double, double> probe_pair(const SystemModel& model, const Eigen::VectorXd& p) {
  auto [g, s] = model.displacement_and_cost(p);
  if (!std::isfinite(g) || !std::isfinite(s)) {
    std::ostringstream os;
    os << "non-finite functional value (g = " << g << ", s = " << s << ") at probe point (";
    for (int i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p(i);
    os << ")";
    throw EvaluationFailure(os.str(), std::vector<double>(p.data(), p.data() + p.size()));
  }
  return {g, s};
}

}  // namespace

ModelGradients model_gradients(const SystemModel& model, const Eigen::VectorXd& p, double h) {
  if (h <= 0.0) throw InvalidArgument("model_gradients: step h must be positive");
  const int n = static_cast<int>(p.size());
  ModelGradients grads{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  Eigen::VectorXd q = p;
  for (int i = 0; i < n; ++i) {
    q(i) = p(i) + h;
    const auto [gp, sp] = probe_pair(model, q);
    q(i) = p(i) - h;
    const auto [gm, sm] = probe_pair(model, q);
    q(i) = p(i);
    grads.g(i) = (gp - gm) / (2.0 * h);
    grads.s(i) = (sp - sm) / (2.0 * h);
  }
  return grads;
}

ModelHessians model_hessians(const SystemModel& model, const Eigen::VectorXd& p, double h) {
  if (h <= 0.0) throw InvalidArgument("model_hessians: step h must be positive");
  const int n = static_cast<int>(p.size());
  ModelHessians hess{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  const auto [g0, s0] = probe_pair(model, p);
  Eigen::VectorXd q = p;
  for (int i = 0; i < n; ++i) {
    q(i) = p(i) + h;
    const auto [gp, sp] = probe_pair(model, q);
    q(i) = p(i) - h;
    const auto [gm, sm] = probe_pair(model, q);
    q(i) = p(i);
    hess.g(i, i) = (gp - 2.0 * g0 + gm) / (h * h);
    hess.s(i, i) = (sp - 2.0 * s0 + sm) / (h * h);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q(i) = p(i) + h; q(j) = p(j) + h;
      const auto [gpp, spp] = probe_pair(model, q);
      q(j) = p(j) - h;
      const auto [gpm, spm] = probe_pair(model, q);
      q(i) = p(i) - h; q(j) = p(j) + h;
      const auto [gmp, smp] = probe_pair(model, q);
      q(j) = p(j) - h;
      const auto [gmm, smm] = probe_pair(model, q);
      q(i) = p(i); q(j) = p(j);
      const double hg = (gpp - gpm - gmp + gmm) / (4.0 * h * h);
      const double hs = (spp - spm - smp + smm) / (4.0 * h * h);
      hess.g(i, j) = hg;
      hess.g(j, i) = hg;
      hess.s(i, j) = hs;
      hess.s(j, i) = hs;
    }
  }
  return hess;
}

}  // namespace gaitlocus
