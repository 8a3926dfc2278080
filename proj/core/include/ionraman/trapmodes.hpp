#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ionraman::trapmodes {

struct TrapConfig {
  int n_ions = 1;
  double omega_x = 0.0;  // axial trap angular frequency, rad/s
  double mass = 0.0;     // kg
};

// Axial normal modes of a linear chain in dimensionless units (lengths in the
// natural Coulomb length scale, frequencies squared in units of omega_x^2).
struct ModeSystem {
  Eigen::VectorXd mu;         // eigenvalues, ascending; mu(0) == 1 (center of mass)
  Eigen::MatrixXd b;          // b(p, s) = ion-s component of mode p; rows orthonormal
  Eigen::VectorXd positions;  // equilibrium positions, ascending, antisymmetric about 0
};

// Stationary points of sum u_s^2/2 + sum_{s<t} 1/|u_s - u_t|, damped Newton
// from a uniform-spacing guess, residual force <= 1e-12. Throws
// std::runtime_error with diagnostics if the iteration fails to converge.
std::vector<double> equilibrium_positions(int n_ions);

ModeSystem mode_eigensystem(const TrapConfig& cfg);

}  // namespace ionraman::trapmodes
