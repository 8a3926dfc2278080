#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ionraman/halfint.hpp"

namespace ionraman::atomic {

// One Zeeman sublevel. Energies are angular frequencies (rad/s) relative to
// the ground-manifold centroid; the data file stores no absolute energies,
// only transition wavelengths, so the zero point is a convention.
struct LevelState {
  std::string term;  // e.g. "4S1/2"
  HalfInt j;
  HalfInt mj;
  double energy = 0.0;  // rad/s
};

struct Transition {
  std::string lower, upper;  // term labels
  double wavelength = 0.0;   // m
  double lifetime = 0.0;     // s
  double decay_rate = 0.0;   // 1/s, = 1/lifetime
  double wavenumber = 0.0;   // 1/m, = 2 pi / lambda
  double angular_frequency() const;  // rad/s
};

struct Isotope {
  int mass_number = 0;
  std::string decay_mode;  // "stable", "beta-", "EC"
  std::optional<double> half_life;  // s; empty when stable
  HalfInt nuclear_spin;
  double mass = 0.0;  // kg
};

struct LevelScheme {
  std::string species;
  std::vector<LevelState> levels;  // every Zeeman sublevel of every manifold
  std::vector<Transition> transitions;
  std::vector<Isotope> isotopes;

  const Transition& transition(const std::string& lower, const std::string& upper) const;
  // Nearest match within tol; used to pick out "the 397 nm line" etc.
  const Transition& transition_near(double wavelength, double tol = 2e-9) const;
  std::vector<LevelState> manifold(const std::string& term) const;
  const LevelState& level(const std::string& term, HalfInt mj) const;
};

// Data file I/O. The schema (JSON) is documented in the repository README;
// parse/serialize round-trip exactly.
LevelScheme parse_level_scheme(const std::string& json_text);
LevelScheme load_level_scheme(const std::string& path);
std::string serialize_level_scheme(const LevelScheme& scheme);

// Built-in Ca+ scheme: 4S1/2, 4P1/2, 3D3/2, 3D5/2 manifolds with the 397 nm,
// 866 nm and 729 nm lines. Identical to data/ca_plus.json.
const LevelScheme& ca_level_scheme();
const char* builtin_ca_data_json();

std::vector<Isotope> isotope_table();

// Lande factor for an LS term with S = 1/2 (L read from the term letter).
double lande_g(const LevelState& level);
// Zeeman shift g_J m_J mu_B B / hbar, rad/s. Applied on demand; the stored
// scheme itself is field-free.
double zeeman_shift(const LevelState& level, double b_tesla);
LevelState zeeman_shifted(const LevelState& level, double b_tesla);

}  // namespace ionraman::atomic
