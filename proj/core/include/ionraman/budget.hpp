#pragma once

#include <vector>

#include "ionraman/atomic.hpp"
#include "ionraman/constants.hpp"

namespace ionraman::budget {

enum class PowerMode { single_laser_v, raman_v, raman_u, saturation };

struct PowerScenario {
  PowerMode mode = PowerMode::single_laser_v;
  double rabi = 0.0;        // Omega, rad/s (not used by saturation)
  double detuning = 0.0;    // Delta, rad/s (Raman modes only)
  double wavelength = 0.0;  // m
  double lifetime = 0.0;    // s
  double diameter = 0.0;    // m
  double eta = 0.0;         // raman_u only
  int n_ions = 0;           // raman_u only

  const char* mode_name() const;
};

// Laser power needed to reach the scenario's Rabi frequency:
//   single-laser V:  Omega^2 h c d^2 tau / lambda^3
//   Raman V:         Omega Delta h c d^2 tau / lambda^3
//   Raman U:         the Raman-V power times sqrt(N) / eta
//   saturation:      4 h c d^2 / (tau lambda^3)
// Throws std::invalid_argument when a mode-specific field is missing.
double required_power(const PowerScenario& sc);

// Lower bound on the trap frequency for efficient sideband cooling:
// nbar * (hbar k^2 / 2 M) / N with k = 2 pi / lambda. For 397 nm and a
// 40Ca mass this is nbar * 2 pi * 31.6 kHz / N.
double sideband_bound(int n_ions, double nbar, double wavelength,
                      double ion_mass = constants::ca40_mass);

// Zeeman splitting of adjacent resonance lines, mu_B B / hbar (rad/s);
// numerically 2 pi * 1.4 MHz per gauss.
double zeeman_splitting(double b_gauss);

struct BudgetRow {
  double wavelength = 0.0;  // m
  double power = 0.0;       // W
  double bandwidth = 0.0;   // rad/s, carried as reference data
};

struct BudgetConfig {
  double rabi = constants::two_pi * 1.0e6;        // rad/s
  double detuning = constants::two_pi * 1.0e10;   // rad/s
  double eta = 0.1;
  int n_ions = 10;
  double d_logic = 10e-6;  // addressed-ion spot, m
  double d_broad = 100e-6; // whole-chain spot, m
  // the workhorse, pump-out and shelving lines by term labels
  const char* workhorse_lower = "4S1/2";
  const char* workhorse_upper = "4P1/2";
  const char* pumpout_lower = "3D3/2";
  const char* shelving_upper = "3D5/2";
  // reference bandwidths (not derived from a model)
  double bw_workhorse = constants::two_pi * 20.0e6;
  double bw_pumpout = constants::two_pi * 2.0e6;
  double bw_shelving = constants::two_pi * 100.0e3;
};

// All scenarios one laser must serve; its budget row is the maximum.
std::vector<PowerScenario> workhorse_scenarios(const atomic::LevelScheme& scheme,
                                               const BudgetConfig& cfg);

// Power over the worst-case role of each laser: the S-P workhorse (logic V/U
// on one ion, sideband-cooling U and saturation over the whole chain), the
// D-P pump-out at saturation, and the shelving line driving a single V pi
// pulse.
std::vector<BudgetRow> budget_table(const atomic::LevelScheme& scheme,
                                    const BudgetConfig& cfg = {});

}  // namespace ionraman::budget
