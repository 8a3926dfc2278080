#include "ionraman/budget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ionraman::budget {

namespace cn = ionraman::constants;

const char* PowerScenario::mode_name() const {
  switch (mode) {
    case PowerMode::single_laser_v: return "single-laser-V";
    case PowerMode::raman_v: return "raman-V";
    case PowerMode::raman_u: return "raman-U";
    case PowerMode::saturation: return "saturation";
  }
  return "?";
}

double required_power(const PowerScenario& sc) {
  if (!(sc.wavelength > 0) || !(sc.lifetime > 0) || !(sc.diameter > 0))
    throw std::invalid_argument("required_power: wavelength, lifetime and diameter must be > 0");
  const double lambda3 = sc.wavelength * sc.wavelength * sc.wavelength;
  const double d2 = sc.diameter * sc.diameter;
  const double hc = cn::planck * cn::light_speed;

  switch (sc.mode) {
    case PowerMode::single_laser_v:
      if (!(sc.rabi > 0)) throw std::invalid_argument("required_power: Omega required");
      return sc.rabi * sc.rabi * hc * d2 * sc.lifetime / lambda3;
    case PowerMode::raman_v:
      if (!(sc.rabi > 0) || !(sc.detuning > 0))
        throw std::invalid_argument("required_power: Omega and Delta required");
      return sc.rabi * sc.detuning * hc * d2 * sc.lifetime / lambda3;
    case PowerMode::raman_u: {
      if (!(sc.rabi > 0) || !(sc.detuning > 0))
        throw std::invalid_argument("required_power: Omega and Delta required");
      if (!(sc.eta > 0) || sc.eta >= 1.0 || sc.n_ions < 1)
        throw std::invalid_argument("required_power: raman-U needs 0 < eta < 1 and N >= 1");
      const double raman_v = sc.rabi * sc.detuning * hc * d2 * sc.lifetime / lambda3;
      return raman_v * std::sqrt(static_cast<double>(sc.n_ions)) / sc.eta;
    }
    case PowerMode::saturation:
      return 4.0 * hc * d2 / (sc.lifetime * lambda3);
  }
  throw std::invalid_argument("required_power: unknown mode");
}

double sideband_bound(int n_ions, double nbar, double wavelength, double ion_mass) {
  if (n_ions < 1) throw std::invalid_argument("sideband_bound: N >= 1 required");
  if (nbar < 0) throw std::invalid_argument("sideband_bound: nbar >= 0 required");
  if (!(wavelength > 0) || !(ion_mass > 0))
    throw std::invalid_argument("sideband_bound: wavelength and mass must be > 0");
  const double k = cn::two_pi / wavelength;
  const double recoil = cn::hbar * k * k / (2.0 * ion_mass);  // rad/s
  return nbar * recoil / n_ions;
}

double zeeman_splitting(double b_gauss) {
  if (b_gauss < 0) throw std::invalid_argument("zeeman_splitting: B >= 0 required");
  return cn::bohr_magneton * b_gauss * cn::gauss_to_tesla / cn::hbar;
}

std::vector<PowerScenario> workhorse_scenarios(const atomic::LevelScheme& scheme,
                                               const BudgetConfig& cfg) {
  const auto& line = scheme.transition(cfg.workhorse_lower, cfg.workhorse_upper);
  PowerScenario base;
  base.rabi = cfg.rabi;
  base.detuning = cfg.detuning;
  base.wavelength = line.wavelength;
  base.lifetime = line.lifetime;
  base.eta = cfg.eta;
  base.n_ions = cfg.n_ions;

  std::vector<PowerScenario> list;
  PowerScenario s = base;  // logic V, addressed ion
  s.mode = PowerMode::raman_v;
  s.diameter = cfg.d_logic;
  list.push_back(s);
  s.mode = PowerMode::raman_u;  // logic U, addressed ion
  list.push_back(s);
  s.mode = PowerMode::raman_u;  // sideband cooling drives the whole chain
  s.diameter = cfg.d_broad;
  list.push_back(s);
  s.mode = PowerMode::saturation;  // Doppler cooling / readout
  s.diameter = cfg.d_broad;
  list.push_back(s);
  return list;
}

std::vector<BudgetRow> budget_table(const atomic::LevelScheme& scheme, const BudgetConfig& cfg) {
  std::vector<BudgetRow> rows;

  const auto workhorse = workhorse_scenarios(scheme, cfg);
  double worst = 0.0;
  for (const auto& sc : workhorse) worst = std::max(worst, required_power(sc));
  rows.push_back({workhorse.front().wavelength, worst, cfg.bw_workhorse});

  const auto& pumpout = scheme.transition(cfg.pumpout_lower, cfg.workhorse_upper);
  PowerScenario sat;
  sat.mode = PowerMode::saturation;
  sat.wavelength = pumpout.wavelength;
  sat.lifetime = pumpout.lifetime;
  sat.diameter = cfg.d_broad;
  rows.push_back({pumpout.wavelength, required_power(sat), cfg.bw_pumpout});

  const auto& shelving = scheme.transition(cfg.workhorse_lower, cfg.shelving_upper);
  PowerScenario shelf;
  shelf.mode = PowerMode::single_laser_v;
  shelf.rabi = cfg.rabi;
  shelf.wavelength = shelving.wavelength;
  shelf.lifetime = shelving.lifetime;
  shelf.diameter = cfg.d_broad;
  rows.push_back({shelving.wavelength, required_power(shelf), cfg.bw_shelving});

  return rows;
}

}  // namespace ionraman::budget
