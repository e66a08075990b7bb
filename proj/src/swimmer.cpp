#include "gaitlocus/swimmer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gaitlocus::swimmer {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxLinks = 8;
constexpr double kMaxCondition = 1e12;

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
// Stack-allocated small matrices; shape dimension n <= kMaxLinks - 1.
using MatFull = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                              kMaxLinks + 2, kMaxLinks + 2>;
using MatConn = Eigen::Matrix<double, 3, Eigen::Dynamic, Eigen::ColMajor, 3, kMaxLinks - 1>;

Mat2 rot(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat2 R;
  R << c, -s, s, c;
  return R;
}

double wrap_angle(double theta) {
  double w = std::remainder(theta, kTwoPi);
  if (w <= -std::numbers::pi) w += kTwoPi;
  return w;
}

std::string shape_string(const Eigen::VectorXd& r) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r(i);
  os << ")";
  return os.str();
}

void validate_geometry(const SwimmerGeometry& geom) {
  if (geom.n_links < 2 || geom.n_links > kMaxLinks) {
    throw InvalidArgument("swimmer requires 2.." + std::to_string(kMaxLinks) + " links, got " +
                          std::to_string(geom.n_links));
  }
  if (!(geom.link_length > 0.0) || !(geom.c_long > 0.0) || !(geom.drag_ratio > 0.0)) {
    throw InvalidArgument("swimmer physical constants must be positive");
  }
}

/**
 * Assemble the full drag-power quadratic form M_full over (xi, rdot).
 *
 * Link poses live in the mean-orientation / centroid body frame. For link i
 * with pose (d_i, theta_i) the link-frame velocity splits as
 * T_i xi + K_i rdot, and the per-link drag form integrated along the link is
 * D = diag(ct L, cn L, cn L^3 / 12). Then M_full = sum W_i^T D W_i with
 * W_i = [T_i K_i]; its top blocks are the force-balance Pfaffian
 * (omega_xi = M_full[0:3, 0:3], omega_r = M_full[0:3, 3:]).
 */
void assemble_drag_form(const SwimmerGeometry& geom, const Eigen::VectorXd& r, MatFull& m_full) {
  const int n_links = geom.n_links;
  const int n = n_links - 1;
  const double half = 0.5 * geom.link_length;

  if (r.size() != n) {
    throw InvalidArgument("shape vector size " + std::to_string(r.size()) +
                          " does not match swimmer with " + std::to_string(n_links) + " links");
  }

  // Chain-frame kinematics (link 0 aligned with the chain x axis).
  std::array<double, kMaxLinks> phi{};
  std::array<Vec2, kMaxLinks> c{};
  std::array<Vec2, kMaxLinks> u{};
  phi[0] = 0.0;
  for (int i = 1; i < n_links; ++i) phi[i] = phi[i - 1] + r(i - 1);
  for (int i = 0; i < n_links; ++i) u[i] = Vec2(std::cos(phi[i]), std::sin(phi[i]));
  c[0].setZero();
  for (int i = 1; i < n_links; ++i) c[i] = c[i - 1] + half * (u[i - 1] + u[i]);

  double theta_mean = 0.0;
  Vec2 c_mean = Vec2::Zero();
  for (int i = 0; i < n_links; ++i) {
    theta_mean += phi[i];
    c_mean += c[i];
  }
  theta_mean /= n_links;
  c_mean /= n_links;

  const Mat2 Rb = rot(-theta_mean);  // chain frame -> body frame

  std::array<double, kMaxLinks> theta{};
  std::array<Vec2, kMaxLinks> d{};
  for (int i = 0; i < n_links; ++i) {
    theta[i] = phi[i] - theta_mean;
    d[i] = Rb * (c[i] - c_mean);
  }

  // Shape Jacobians: chain-frame derivative of each link center per joint.
  // dphi[i]/dr_m = [i >= m+1]; the recursion mirrors the position chain.
  std::array<std::array<Vec2, kMaxLinks>, kMaxLinks - 1> dc{};
  std::array<double, kMaxLinks - 1> dtheta_mean{};
  std::array<Vec2, kMaxLinks - 1> dc_mean{};
  for (int m = 0; m < n; ++m) {
    dtheta_mean[m] = static_cast<double>(n_links - 1 - m) / n_links;
    dc[m][0].setZero();
    for (int i = 1; i < n_links; ++i) {
      const Vec2 du_prev = (i - 1 >= m + 1) ? Vec2(-u[i - 1].y(), u[i - 1].x()) : Vec2::Zero();
      const Vec2 du_here = (i >= m + 1) ? Vec2(-u[i].y(), u[i].x()) : Vec2::Zero();
      dc[m][i] = dc[m][i - 1] + half * (du_prev + du_here);
    }
    dc_mean[m].setZero();
    for (int i = 0; i < n_links; ++i) dc_mean[m] += dc[m][i];
    dc_mean[m] /= n_links;
  }

  const double ct = geom.c_long;
  const double cn = geom.c_long * geom.drag_ratio;
  const double L = geom.link_length;
  const Eigen::Vector3d drag(ct * L, cn * L, cn * L * L * L / 12.0);

  m_full.setZero(3 + n, 3 + n);
  Eigen::Matrix<double, 3, Eigen::Dynamic, Eigen::ColMajor, 3, kMaxLinks + 2> W(3, 3 + n);

  for (int i = 0; i < n_links; ++i) {
    const Mat2 Rl = rot(-theta[i]);  // body frame -> link frame

    // T_i = Ad_{h_i^{-1}}: v_link = R(-theta_i)(v + w J d_i), w_link = w.
    W.setZero();
    W.block<2, 2>(0, 0) = Rl;
    W.block<2, 1>(0, 2) = Rl * Vec2(-d[i].y(), d[i].x());
    W(2, 2) = 1.0;

    // K_i columns: link-frame velocity for unit joint rate, body frame fixed.
    for (int m = 0; m < n; ++m) {
      const double dphi_i = (i >= m + 1) ? 1.0 : 0.0;
      const double dth = dphi_i - dtheta_mean[m];
      const Vec2 dd = -dtheta_mean[m] * Vec2(-d[i].y(), d[i].x()) + Rb * (dc[m][i] - dc_mean[m]);
      W.block<2, 1>(0, 3 + m) = Rl * dd;
      W(2, 3 + m) = dth;
    }

    for (int row = 0; row < 3; ++row) {
      m_full.noalias() += drag(row) * (W.row(row).transpose() * W.row(row));
    }
  }
}

/// Solve the force balance for A = omega_xi^{-1} omega_r with a condition check.
MatConn connection_from_form(const SwimmerGeometry& geom, const Eigen::VectorXd& r,
                             const MatFull& m_full) {
  const int n = geom.shape_dim();
  const Eigen::Matrix3d omega_xi = m_full.topLeftCorner(3, 3);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig;
  eig.computeDirect(omega_xi, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues()(0);
  const double hi = eig.eigenvalues()(2);
  if (!(lo > 0.0) || hi / lo > kMaxCondition) {
    throw SingularConfiguration("singular force balance at shape " + shape_string(r),
                                std::vector<double>(r.data(), r.data() + r.size()));
  }
  return omega_xi.llt().solve(m_full.topRightCorner(3, n));
}

struct SamplePass {
  std::vector<Eigen::Vector3d> xi;  ///< body velocity -A(r) rdot per sample
  std::vector<double> speed;        ///< sqrt(rdot^T M rdot) per sample
};

SamplePass per_sample_pass(const SwimmerGeometry& geom, const gait::ShapeTrajectory& traj) {
  validate_geometry(geom);
  const int n_samples = traj.n_samples();
  const int n = geom.shape_dim();
  if (traj.n_joints() != n) {
    throw InvalidArgument("trajectory joint count does not match swimmer shape dimension");
  }

  SamplePass pass;
  pass.xi.resize(n_samples);
  pass.speed.resize(n_samples);

  MatFull m_full;
  Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxLinks + 2, 1> w(3 + n);
  for (int k = 0; k < n_samples; ++k) {
    const Eigen::VectorXd r = traj.r.col(k);
    const Eigen::VectorXd rdot = traj.rdot.col(k);
    try {
      assemble_drag_form(geom, r, m_full);
      const MatConn A = connection_from_form(geom, r, m_full);
      pass.xi[k] = -A * rdot;
    } catch (const SingularConfiguration& e) {
      throw SingularConfiguration(std::string(e.what()) + " (sample " + std::to_string(k) + ")",
                                  e.shape(), k);
    }
    // rdot^T M rdot equals the full drag power of the slaved motion (xi, rdot).
    w.head(3) = pass.xi[k];
    w.tail(n) = rdot;
    const double power = w.dot(m_full * w);
    pass.speed[k] = std::sqrt(std::max(power, 0.0));
  }
  return pass;
}

Eigen::Vector3d pose_rate(const Eigen::Vector3d& pose, const Eigen::Vector3d& xi) {
  const double c = std::cos(pose(2)), s = std::sin(pose(2));
  return {c * xi(0) - s * xi(1), s * xi(0) + c * xi(1), xi(2)};
}

// RK4 over sample pairs: samples 2k and 2k+2 are step endpoints, 2k+1 the
// exact midpoint stage. The pose ODE is pose' = (R(theta) v, omega).
GroupDisplacement reconstruct_displacement(const SamplePass& pass, int n_samples) {
  if (n_samples < 4 || n_samples % 2 != 0) {
    throw InvalidArgument("net_displacement requires an even sample count >= 4 (midpoint stages)");
  }
  const double h = 2.0 * kTwoPi / n_samples;
  Eigen::Vector3d pose = Eigen::Vector3d::Zero();
  for (int k = 0; k + 1 < n_samples; k += 2) {
    const Eigen::Vector3d& xa = pass.xi[k];
    const Eigen::Vector3d& xm = pass.xi[k + 1];
    const Eigen::Vector3d& xb = pass.xi[(k + 2) % n_samples];
    const Eigen::Vector3d k1 = pose_rate(pose, xa);
    const Eigen::Vector3d k2 = pose_rate(pose + 0.5 * h * k1, xm);
    const Eigen::Vector3d k3 = pose_rate(pose + 0.5 * h * k2, xm);
    const Eigen::Vector3d k4 = pose_rate(pose + h * k3, xb);
    pose += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  GroupDisplacement out;
  out.x = pose(0);
  out.y = pose(1);
  out.theta = wrap_angle(pose(2));
  return out;
}

double integrate_pathlength(const SamplePass& pass, int n_samples) {
  double sum = 0.0;
  for (double v : pass.speed) sum += v;
  return sum * kTwoPi / n_samples;
}

}  // namespace

GroupDisplacement GroupDisplacement::inverse() const {
  const double c = std::cos(theta), s = std::sin(theta);
  GroupDisplacement inv;
  inv.x = -(c * x + s * y);
  inv.y = -(-s * x + c * y);
  inv.theta = wrap_angle(-theta);
  return inv;
}

GroupDisplacement GroupDisplacement::compose(const GroupDisplacement& then) const {
  const double c = std::cos(theta), s = std::sin(theta);
  GroupDisplacement out;
  out.x = x + c * then.x - s * then.y;
  out.y = y + s * then.x + c * then.y;
  out.theta = wrap_angle(theta + then.theta);
  return out;
}

double GroupDisplacement::translation_norm() const { return std::hypot(x, y); }

LocalConnection local_connection(const SwimmerGeometry& geom, const Eigen::VectorXd& r) {
  validate_geometry(geom);
  MatFull m_full;
  assemble_drag_form(geom, r, m_full);
  LocalConnection conn;
  conn.A = connection_from_form(geom, r, m_full);
  return conn;
}

Eigen::Matrix3d body_drag_matrix(const SwimmerGeometry& geom, const Eigen::VectorXd& r) {
  validate_geometry(geom);
  MatFull m_full;
  assemble_drag_form(geom, r, m_full);
  return m_full.topLeftCorner(3, 3);
}

PowerMetric power_metric(const SwimmerGeometry& geom, const Eigen::VectorXd& r) {
  validate_geometry(geom);
  const int n = geom.shape_dim();
  MatFull m_full;
  assemble_drag_form(geom, r, m_full);
  const MatConn A = connection_from_form(geom, r, m_full);

  Eigen::MatrixXd B(3 + n, n);
  B.topRows(3) = -A;
  B.bottomRows(n) = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd M = B.transpose() * m_full * B;
  PowerMetric metric;
  metric.M = 0.5 * (M + M.transpose());
  return metric;
}

GroupDisplacement net_displacement(const SwimmerGeometry& geom, const gait::ShapeTrajectory& traj) {
  if (traj.n_samples() < 4 || traj.n_samples() % 2 != 0) {
    throw InvalidArgument("net_displacement requires an even sample count >= 4 (midpoint stages)");
  }
  return reconstruct_displacement(per_sample_pass(geom, traj), traj.n_samples());
}

double pathlength_cost(const SwimmerGeometry& geom, const gait::ShapeTrajectory& traj) {
  return integrate_pathlength(per_sample_pass(geom, traj), traj.n_samples());
}

std::vector<Eigen::Vector3d> constraint_curvature(const SwimmerGeometry& geom,
                                                  const Eigen::VectorXd& r) {
  validate_geometry(geom);
  const int n = geom.shape_dim();
  const double h = 1e-4 * std::max(1.0, r.cwiseAbs().maxCoeff());

  // Central differences of the connection columns.
  std::vector<Eigen::MatrixXd> dA(n);  // dA[i] = d A / d r_i, 3 x n
  Eigen::VectorXd q = r;
  for (int i = 0; i < n; ++i) {
    q(i) = r(i) + h;
    const Eigen::MatrixXd Ap = local_connection(geom, q).A;
    q(i) = r(i) - h;
    const Eigen::MatrixXd Am = local_connection(geom, q).A;
    q(i) = r(i);
    dA[i] = (Ap - Am) / (2.0 * h);
  }
  const Eigen::MatrixXd A0 = local_connection(geom, r).A;

  const auto bracket = [](const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
    // se(2): [(v1,w1),(v2,w2)] = (w1 J v2 - w2 J v1, 0), J = [[0,-1],[1,0]].
    return Eigen::Vector3d(-u(2) * v(1) + v(2) * u(1), u(2) * v(0) - v(2) * u(0), 0.0);
  };

  std::vector<Eigen::Vector3d> planes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Eigen::Vector3d exterior = dA[i].col(j) - dA[j].col(i);
      planes.push_back(-exterior + bracket(A0.col(i), A0.col(j)));
    }
  }
  return planes;
}

SwimmerSystem::SwimmerSystem(SwimmerGeometry geom, int fourier_order, int samples_per_cycle,
                             std::string name)
    : geom_(geom), order_(fourier_order), samples_(samples_per_cycle), name_(std::move(name)) {
  validate_geometry(geom_);
  if (order_ < 1) throw InvalidArgument("SwimmerSystem requires fourier_order >= 1");
  if (samples_ < std::max(8, 8 * order_) || samples_ % 2 != 0) {
    throw InvalidArgument("SwimmerSystem requires an even samples_per_cycle >= 8 * order");
  }
}

gait::GaitParams SwimmerSystem::params_from_vector(const Eigen::VectorXd& p) const {
  return gait::GaitParams::from_vector(geom_.shape_dim(), order_, p);
}

namespace {

/**
 * Canonical representative of the phase-shift orbit: rotate the cycle so the
 * first harmonic of joint 0 is pure cosine with nonnegative amplitude. The
 * exact SE(2) reconstruction measures x in the frame at the cycle start, so
 * the raw functional picks up a tiny start-phase dependence (conjugation by
 * the mid-cycle pose). Evaluating at a fixed orbit representative makes the
 * functional exactly invariant along the trivial null direction, which the
 * continuation's stationarity tolerance requires.
 */
gait::GaitParams canonical_phase(const gait::GaitParams& params) {
  if (params.order < 1) return params;
  const double a = params.a(0, 1);
  const double b = params.b(0, 1);
  if (a == 0.0 && b == 0.0) return params;
  return gait::phase_shift(params, std::atan2(b, a));
}

}  // namespace

std::pair<double, double> SwimmerSystem::displacement_and_cost(const Eigen::VectorXd& p) const {
  const gait::GaitParams params = canonical_phase(params_from_vector(p));
  const gait::ShapeTrajectory traj = gait::sample_gait(params, samples_);
  const double max_angle = traj.r.cwiseAbs().maxCoeff();
  if (max_angle > geom_.joint_limit) {
    throw JointLimitError("gait leaves joint box: max |alpha| = " + std::to_string(max_angle) +
                          " > " + std::to_string(geom_.joint_limit));
  }
  const SamplePass pass = per_sample_pass(geom_, traj);
  const GroupDisplacement d = reconstruct_displacement(pass, samples_);
  return {d.x, integrate_pathlength(pass, samples_)};
}

double SwimmerSystem::displacement(const Eigen::VectorXd& p) const {
  return displacement_and_cost(p).first;
}

double SwimmerSystem::cost(const Eigen::VectorXd& p) const {
  return displacement_and_cost(p).second;
}

std::vector<Eigen::VectorXd> SwimmerSystem::gauge_directions(const Eigen::VectorXd& p) const {
  Eigen::VectorXd t = gait::phase_shift_generator(params_from_vector(p));
  if (t.norm() < 1e-14) return {};
  return {t};
}

}  // namespace gaitlocus::swimmer
