#include "ionraman/trapmodes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ionraman::trapmodes {

namespace {

Eigen::VectorXd chain_gradient(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  Eigen::VectorXd g = u;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      const double d = u(s) - u(t);
      g(s) -= (d > 0 ? 1.0 : -1.0) / (d * d);
    }
  return g;
}

Eigen::MatrixXd chain_hessian(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    double diag = 1.0;
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      const double d3 = std::pow(std::abs(u(s) - u(t)), 3);
      diag += 2.0 / d3;
      h(s, t) = -2.0 / d3;
    }
    h(s, s) = diag;
  }
  return h;
}

}  // namespace

std::vector<double> equilibrium_positions(int n_ions) {
  if (n_ions < 1 || n_ions > 50)
    throw std::invalid_argument("equilibrium_positions: need 1 <= N <= 50");
  if (n_ions == 1) return {0.0};

  // uniform spacing close to the known minimum-gap scaling
  const double spacing = 2.018 / std::pow(static_cast<double>(n_ions), 0.559);
  Eigen::VectorXd u(n_ions);
  for (int s = 0; s < n_ions; ++s)
    u(s) = spacing * (s - 0.5 * (n_ions - 1));

  constexpr double tol = 1e-13;
  constexpr int max_iter = 200;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::VectorXd g = chain_gradient(u);
    const double res = g.cwiseAbs().maxCoeff();
    if (res <= tol) {
      std::vector<double> out(u.data(), u.data() + n_ions);
      return out;
    }
    const Eigen::VectorXd step = chain_hessian(u).ldlt().solve(-g);
    double alpha = 1.0;
    const double g0 = g.squaredNorm();
    for (int back = 0; back < 60; ++back) {
      Eigen::VectorXd trial = u + alpha * step;
      bool ordered = true;
      for (int s = 1; s < n_ions; ++s)
        if (trial(s) <= trial(s - 1)) ordered = false;
      if (ordered && chain_gradient(trial).squaredNorm() < g0) {
        u = trial;
        break;
      }
      alpha *= 0.5;
    }
    // the chain is symmetric; pinning the midpoint suppresses drift
    u = 0.5 * (u - u.reverse().eval());
  }

  std::ostringstream msg;
  msg << "equilibrium_positions: Newton iteration did not reach residual " << tol << " for N="
      << n_ions << " (residual " << chain_gradient(u).cwiseAbs().maxCoeff() << " after "
      << max_iter << " iterations)";
  throw std::runtime_error(msg.str());
}

ModeSystem mode_eigensystem(const TrapConfig& cfg) {
  if (cfg.n_ions < 1) throw std::invalid_argument("mode_eigensystem: N >= 1 required");
  if (!(cfg.omega_x > 0.0)) throw std::invalid_argument("mode_eigensystem: omega_x must be > 0");
  if (!(cfg.mass > 0.0)) throw std::invalid_argument("mode_eigensystem: mass must be > 0");

  const std::vector<double> pos = equilibrium_positions(cfg.n_ions);
  Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(pos.data(), cfg.n_ions);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(chain_hessian(u));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("mode_eigensystem: eigensolver failed");

  ModeSystem modes;
  modes.positions = u;
  modes.mu = solver.eigenvalues();  // ascending
  modes.b = solver.eigenvectors().transpose();

  // sign convention: first nonzero component of each mode positive
  for (int p = 0; p < cfg.n_ions; ++p)
    for (int s = 0; s < cfg.n_ions; ++s) {
      if (std::abs(modes.b(p, s)) > 1e-12) {
        if (modes.b(p, s) < 0) modes.b.row(p) = -modes.b.row(p);
        break;
      }
    }

  return modes;
}

}  // namespace ionraman::trapmodes
