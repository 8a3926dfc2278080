#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ionraman::dynamics {

using Complex = std::complex<double>;

// One square V (carrier) or U (red-sideband) pulse. theta is the target
// rotation on the nominal transition (vacuum carrier for V, one bus phonon
// for U); pairs with other phonon occupations rotate by theta scaled with
// their own coupling factor.
struct PulseSpec {
  enum class Kind { V, U };
  Kind kind = Kind::V;
  double theta = 0.0;         // rad, = 2 |Omega_eff| t
  double phi = 0.0;           // rad
  double chi = 0.0;           // AC Stark phase, = t delta / 2
  double common_phase = 0.0;  // (A + D) t / 2
  double duration = 0.0;      // s
  int bus_mode = 0;
  int level_lo = 0;           // internal pair coupled by the pulse
  int level_hi = 1;
  // Per-mode displacement amplitudes for the addressed ion. Empty means the
  // small-coupling limit: carrier pairs all rotate by theta, sideband pairs
  // scale as sqrt(n+1).
  std::vector<double> xi;
};

// Duration, Stark phase and common phase for a target angle, given the
// effective Rabi frequency and the two light shifts (resonance imposed, so
// the two-photon offset is a - d).
PulseSpec make_pulse(PulseSpec::Kind kind, double theta, Complex omega_eff, double stark_a,
                     double stark_d);

// exp[i(A+D)t/2] [[e^{i chi} cos(theta/2), i e^{i phi} sin(theta/2)],
//                 [i e^{-i phi} sin(theta/2), e^{-i chi} cos(theta/2)]]
Eigen::Matrix2cd two_level_propagator(const PulseSpec& pulse);

// Dense state vector over (internal level per ion) x (Fock state per mode).
// Basis labels look like "q:01|ph:100".
class StateVector {
 public:
  StateVector(int n_ions, int n_modes, int n_max, int internal_dim = 3);

  static StateVector ground(int n_ions, int n_modes, int n_max, int internal_dim = 3);

  int n_ions() const { return n_ions_; }
  int n_modes() const { return n_modes_; }
  int n_max() const { return n_max_; }
  int internal_dim() const { return internal_dim_; }
  int size() const { return static_cast<int>(amp_.size()); }

  Complex& operator[](int idx) { return amp_[idx]; }
  const Complex& operator[](int idx) const { return amp_[idx]; }
  std::span<const Complex> amplitudes() const { return amp_; }

  int index(std::span<const int> internal, std::span<const int> phonon) const;
  void decode(int idx, std::vector<int>& internal, std::vector<int>& phonon) const;
  std::string label(int idx) const;
  int index_of_label(const std::string& label) const;

  double norm() const;
  // Total population carried by basis states with bus-mode occupation > 0.
  double bus_excited_population(int bus_mode = 0) const;

 private:
  int n_ions_, n_modes_, n_max_, internal_dim_;
  int phonon_dim_;
  std::vector<Complex> amp_;
};

// Applies the two-level propagator pairwise across the register for one
// addressed ion. V couples (lo,{n}) <-> (hi,{n}); U couples
// (lo, n_bus+1) <-> (hi, n_bus). Throws if a U pulse finds population at the
// truncation edge.
void apply_pulse(StateVector& state, const PulseSpec& pulse, int ion);

struct CzOptions {
  int bus_mode = 0;
  int aux_level = 2;          // internal level used for the 2 pi loop
  std::vector<double> xi;     // forwarded to the three pulses
  double bus_vacuum_tol = 1e-6;
};

// Controlled-phase construction: U pi on the control, 2 pi loop through the
// auxiliary level on the target, U pi on the control. Requires the bus mode
// in vacuum; leaves it there.
void cz_gate_sequence(StateVector& state, int control, int target, const CzOptions& opts = {});

// Rotating-frame amplitudes of a lower and an upper manifold coupled by a
// set of classical beams (no decay):
//   da_j/dt = (i/2) sum_{k,a} Omega^a_{jk} exp(-i Delta^a_{jk} t) b_k
//   db_k/dt = (i/2) sum_{j,a} conj(Omega^a_{jk}) exp(+i Delta^a_{jk} t) a_j
struct MultiLevelSystem {
  struct BeamCoupling {
    Eigen::MatrixXcd rabi;      // (lower j, upper k), rad/s
    Eigen::MatrixXd detuning;   // (lower j, upper k), rad/s
  };
  std::vector<Complex> lower;  // a_j
  std::vector<Complex> upper;  // b_k
  std::vector<BeamCoupling> beams;
  double time = 0.0;           // s

  double norm() const;
};

// Advances the system by `duration` with an adaptive Dormand-Prince RK
// integrator starting from step dt (which must resolve the largest detuning:
// dt * max|Delta| <= 0.1). Norm is never renormalized; drift beyond 1e-8 is
// reported as a numerical error.
MultiLevelSystem integrate_full(const MultiLevelSystem& system, double duration, double dt);

}  // namespace ionraman::dynamics
