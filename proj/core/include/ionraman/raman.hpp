#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ionraman/atomic.hpp"
#include "ionraman/specfun.hpp"
#include "ionraman/trapmodes.hpp"

namespace ionraman::raman {

using Complex = std::complex<double>;

// Polarization in the spherical basis, comp[0..2] = (c_{+1}, c_0, c_{-1})
// with eps = sum_q c_q eps_q and eps_{+1} = (-1,i,0)/sqrt2, eps_0 = (0,0,1),
// eps_{-1} = (1,i,0)/sqrt2.
struct SphericalPol {
  std::array<Complex, 3> comp{};

  static SphericalPol sigma_plus() { return {{Complex(1, 0), 0, 0}}; }
  static SphericalPol pi() { return {{0, Complex(1, 0), 0}}; }
  static SphericalPol sigma_minus() { return {{0, 0, Complex(1, 0)}}; }
  static SphericalPol from_cartesian(const Eigen::Vector3cd& v);

  Complex component(int q) const;  // q in {+1, 0, -1}
  double norm() const;
  SphericalPol normalized() const;
  Eigen::Vector3cd cartesian() const;
};

// eps_q . v (plain bilinear dot, no conjugation) for v in the spherical
// basis; evaluates to (-1)^q c_{-q}.
Complex spherical_dot(int q, const SphericalPol& v);

struct LaserBeam {
  enum class Role { pump, stokes };
  Role role = Role::pump;
  double omega = 0.0;  // rad/s
  double field = 0.0;  // V/m
  SphericalPol pol;
  Eigen::Vector3d direction{1.0, 0.0, 0.0};  // unit propagation vector
  double phase = 0.0;                        // rad
  double power = 0.0;                        // W, if field came from a power
  double diameter = 0.0;                     // 1/e^2 intensity diameter, m

  double wavenumber() const;          // omega / c
  Eigen::Vector3d wavevector() const; // wavenumber * direction
};

// Field amplitude of a TEM00 beam of the given power through a 1/e^2
// diameter d: E0^2 = 64 P alpha hbar / (e^2 d^2).
double field_from_power(double power, double diameter);

// Single-photon Rabi frequencies (rad/s) of both beams on both qubit legs,
// one entry per upper sublevel, plus the mean detunings.
struct RamanCoupling {
  std::vector<Complex> pump_i, stokes_i;  // couplings |I> <-> |k>
  std::vector<Complex> pump_j, stokes_j;  // couplings |J> <-> |k>
  std::vector<double> detuning;           // mean detuning per upper level, rad/s
  double delta = 0.0;                     // pump-Stokes relative detuning, rad/s
  size_t size() const { return detuning.size(); }
};

struct StarkShifts {
  double a = 0.0;  // light shift of |I>, rad/s
  double d = 0.0;  // light shift of |J>, rad/s
  Complex b{};     // two-photon coupling, rad/s
};

// A = sum_k (|Op_Ik|^2 + |Os_Ik|^2) / 4 Dk, D likewise for |J>,
// B = sum_k Op_Ik conj(Os_Jk) / 4 Dk. Throws on a resonant intermediate
// level (any detuning exactly zero).
StarkShifts stark_shifts(const RamanCoupling& c);

// Two-photon resonance offset delta = A - D.
double resonance_delta(double a, double d);

// Non-fatal diagnostics: one message per upper level with |Omega/detuning|
// above the threshold (perturbative treatment getting doubtful).
std::vector<std::string> perturbative_warnings(const RamanCoupling& c, double threshold = 0.1);

struct LambDicke {
  double eta = 0.0;
  std::vector<double> xi;  // per mode, for the designated ion
};

// eta = (k_s - k_p) . x_hat sqrt(hbar / 2 M omega_x); xi_p = eta b^(p)_s /
// mu_p^(1/4) for the designated ion (default: center of the chain).
LambDicke lamb_dicke(const LaserBeam& pump, const LaserBeam& stokes,
                     const trapmodes::TrapConfig& cfg, const trapmodes::ModeSystem& modes,
                     int ion = -1);
LambDicke lamb_dicke(const LaserBeam& pump, const LaserBeam& stokes,
                     const trapmodes::TrapConfig& cfg, int ion = -1);
// Same xi construction for a directly chosen eta (parameter scans).
LambDicke lamb_dicke_from_eta(double eta, const trapmodes::ModeSystem& modes, int ion = -1);

struct PhononRegister {
  std::vector<int> occupation;
};

// f({m},{n},eta) = prod_p <m_p| exp[i xi_p (a_dag + a)] |n_p>.
Complex coupling_factor(const PhononRegister& m, const PhononRegister& n, const LambDicke& ld,
                        const trapmodes::ModeSystem& modes);

// <lower| d.eps |upper> = sqrt(3 A (2J_up + 1) / (4 c alpha k^3)) *
// sum_q 3j(J_lo, 1, J_up; -m_lo, q, m_up) (eps_q . eps), times the elementary
// charge, in C m. Forbidden |delta m| > 1 gives 0, not an error.
Complex dipole_element(const atomic::LevelState& lower, const atomic::LevelState& upper,
                       const SphericalPol& pol, const atomic::Transition& trans);

// Dimensionless geometry factor beta for one upper sublevel.
Complex beta_factor(const atomic::LevelState& level0, const atomic::LevelState& level1,
                    const atomic::LevelState& upper, const SphericalPol& pump_pol,
                    const SphericalPol& stokes_pol);

// Omega_eff = f * sum_k Op_Ik conj(Os_Jk) / 4 Dk. Throws on zero detuning.
Complex effective_rabi(const RamanCoupling& c, Complex f);

// Assemble the coupling for a qubit pair driven through an upper manifold:
// Omega = <lo|d.eps|up> E0 exp(i phase) / hbar per beam and sublevel, mean
// detunings from the level energies and beam frequencies.
RamanCoupling build_coupling(const atomic::LevelState& level0, const atomic::LevelState& level1,
                             const std::vector<atomic::LevelState>& upper_manifold,
                             const atomic::Transition& trans, const LaserBeam& pump,
                             const LaserBeam& stokes);

}  // namespace ionraman::raman
