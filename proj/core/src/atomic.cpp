#include "ionraman/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ionraman/constants.hpp"

namespace ionraman::atomic {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int term_orbital_l(const std::string& term) {
  for (char ch : term) {
    switch (ch) {
      case 'S': return 0;
      case 'P': return 1;
      case 'D': return 2;
      case 'F': return 3;
      default: break;
    }
  }
  throw std::invalid_argument("cannot read orbital letter from term '" + term + "'");
}

struct Manifold {
  std::string term;
  HalfInt j;
  double energy = 0.0;  // rad/s
  bool placed = false;
};

// Absolute energies are not stored in the data file; anchor the first listed
// manifold at zero and walk the transition graph (each line fixes
// upper - lower = 2 pi c / lambda).
void place_energies(std::vector<Manifold>& manifolds, const std::vector<Transition>& transitions) {
  if (manifolds.empty()) return;
  manifolds.front().placed = true;
  manifolds.front().energy = 0.0;
  auto find = [&](const std::string& term) -> Manifold& {
    for (auto& m : manifolds)
      if (m.term == term) return m;
    throw std::invalid_argument("transition references unknown term '" + term + "'");
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& t : transitions) {
      Manifold& lo = find(t.lower);
      Manifold& hi = find(t.upper);
      const double gap = t.angular_frequency();
      if (lo.placed && !hi.placed) {
        hi.energy = lo.energy + gap;
        hi.placed = true;
        progress = true;
      } else if (hi.placed && !lo.placed) {
        lo.energy = hi.energy - gap;
        lo.placed = true;
        progress = true;
      }
    }
  }
  for (const auto& m : manifolds)
    if (!m.placed)
      throw std::invalid_argument("manifold '" + m.term + "' is not connected to any transition");
}

}  // namespace

double Transition::angular_frequency() const {
  return constants::two_pi * constants::light_speed / wavelength;
}

const Transition& LevelScheme::transition(const std::string& lower, const std::string& upper) const {
  for (const auto& t : transitions)
    if (t.lower == lower && t.upper == upper) return t;
  throw std::invalid_argument("no transition " + lower + " -> " + upper);
}

const Transition& LevelScheme::transition_near(double wavelength, double tol) const {
  const Transition* best = nullptr;
  double best_gap = tol;
  for (const auto& t : transitions) {
    const double gap = std::abs(t.wavelength - wavelength);
    if (gap <= best_gap) {
      best_gap = gap;
      best = &t;
    }
  }
  if (!best) {
    std::ostringstream msg;
    msg << "no transition within " << tol * 1e9 << " nm of " << wavelength * 1e9 << " nm";
    throw std::invalid_argument(msg.str());
  }
  return *best;
}

std::vector<LevelState> LevelScheme::manifold(const std::string& term) const {
  std::vector<LevelState> out;
  for (const auto& s : levels)
    if (s.term == term) out.push_back(s);
  if (out.empty()) throw std::invalid_argument("unknown term '" + term + "'");
  return out;
}

const LevelState& LevelScheme::level(const std::string& term, HalfInt mj) const {
  for (const auto& s : levels)
    if (s.term == term && s.mj == mj) return s;
  throw std::invalid_argument("no sublevel " + term + " mJ=" + to_string(mj));
}

LevelScheme parse_level_scheme(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("atomic data is not valid JSON: ") + e.what());
  }

  LevelScheme scheme;
  scheme.species = doc.at("species").get<std::string>();

  std::vector<Manifold> manifolds;
  for (const auto& entry : doc.at("levels")) {
    Manifold m;
    m.term = entry.at("term").get<std::string>();
    m.j = parse_half_int(entry.at("J").get<std::string>());
    manifolds.push_back(m);
  }

  for (const auto& entry : doc.at("transitions")) {
    Transition t;
    t.lower = entry.at("lower").get<std::string>();
    t.upper = entry.at("upper").get<std::string>();
    t.wavelength = entry.at("wavelength_nm").get<double>() * 1e-9;
    t.lifetime = entry.at("lifetime_s").get<double>();
    if (t.wavelength <= 0 || t.lifetime <= 0)
      throw std::invalid_argument("transition wavelength and lifetime must be positive");
    t.decay_rate = 1.0 / t.lifetime;
    t.wavenumber = constants::two_pi / t.wavelength;
    scheme.transitions.push_back(t);
  }

  place_energies(manifolds, scheme.transitions);

  for (const auto& m : manifolds)
    for (int tm = -m.j.twice; tm <= m.j.twice; tm += 2)
      scheme.levels.push_back({m.term, m.j, HalfInt::from_twice(tm), m.energy});

  // lower manifolds must sit below upper manifolds
  for (const auto& t : scheme.transitions) {
    const double lo = scheme.manifold(t.lower).front().energy;
    const double hi = scheme.manifold(t.upper).front().energy;
    if (!(lo < hi))
      throw std::invalid_argument("transition " + t.lower + " -> " + t.upper +
                                  " has non-positive energy gap");
  }

  for (const auto& entry : doc.at("isotopes")) {
    Isotope iso;
    iso.mass_number = entry.at("mass_number").get<int>();
    iso.decay_mode = entry.at("decay_mode").get<std::string>();
    if (!entry.at("half_life_s").is_null())
      iso.half_life = entry.at("half_life_s").get<double>();
    if ((iso.decay_mode == "stable") != !iso.half_life.has_value())
      throw std::invalid_argument("isotope half-life/decay-mode mismatch");
    iso.nuclear_spin = parse_half_int(entry.at("nuclear_spin").get<std::string>());
    iso.mass = entry.at("mass_u").get<double>() * constants::atomic_mass_unit;
    scheme.isotopes.push_back(iso);
  }

  return scheme;
}

LevelScheme load_level_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open atomic data file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_level_scheme(buf.str());
}

std::string serialize_level_scheme(const LevelScheme& scheme) {
  ordered_json doc;
  doc["species"] = scheme.species;

  doc["levels"] = ordered_json::array();
  std::vector<std::string> seen;
  for (const auto& s : scheme.levels) {
    if (std::find(seen.begin(), seen.end(), s.term) != seen.end()) continue;
    seen.push_back(s.term);
    doc["levels"].push_back({{"term", s.term}, {"J", to_string(s.j)}});
  }

  doc["transitions"] = ordered_json::array();
  for (const auto& t : scheme.transitions)
    doc["transitions"].push_back({{"lower", t.lower},
                                  {"upper", t.upper},
                                  {"wavelength_nm", t.wavelength * 1e9},
                                  {"lifetime_s", t.lifetime}});

  doc["isotopes"] = ordered_json::array();
  for (const auto& iso : scheme.isotopes) {
    ordered_json entry = {{"mass_number", iso.mass_number},
                          {"decay_mode", iso.decay_mode},
                          {"half_life_s", nullptr},
                          {"nuclear_spin", to_string(iso.nuclear_spin)},
                          {"mass_u", iso.mass / constants::atomic_mass_unit}};
    if (iso.half_life) entry["half_life_s"] = *iso.half_life;
    doc["isotopes"].push_back(entry);
  }

  return doc.dump(2) + "\n";
}

const LevelScheme& ca_level_scheme() {
  static const LevelScheme scheme = parse_level_scheme(builtin_ca_data_json());
  return scheme;
}

std::vector<Isotope> isotope_table() { return ca_level_scheme().isotopes; }

double lande_g(const LevelState& level) {
  const int l = term_orbital_l(level.term);
  const double j = level.j.value();
  const double s = 0.5;
  return 1.5 + (s * (s + 1.0) - l * (l + 1.0)) / (2.0 * j * (j + 1.0));
}

double zeeman_shift(const LevelState& level, double b_tesla) {
  return lande_g(level) * level.mj.value() * constants::bohr_magneton * b_tesla / constants::hbar;
}

LevelState zeeman_shifted(const LevelState& level, double b_tesla) {
  LevelState out = level;
  out.energy += zeeman_shift(level, b_tesla);
  return out;
}

}  // namespace ionraman::atomic
