#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ionraman/atomic.hpp"
#include "ionraman/budget.hpp"
#include "ionraman/constants.hpp"
#include "ionraman/dynamics.hpp"
#include "ionraman/raman.hpp"
#include "ionraman/reference.hpp"
#include "ionraman/trapmodes.hpp"

namespace ionraman::cli {

namespace {

namespace cn = ionraman::constants;
using nlohmann::json;
using nlohmann::ordered_json;
using Complex = std::complex<double>;

// single formatting path so identical inputs give byte-identical output
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_angle(const std::string& text) {
  // "pi", "2pi", "pi/2", "3pi/4" or a plain number in radians
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad angle '" + text + "'");
    return v;
  }
  double factor = 1.0;
  if (pos > 0) factor = std::stod(text.substr(0, pos));
  double divisor = 1.0;
  const std::string rest = text.substr(pos + 2);
  if (!rest.empty()) {
    if (rest[0] != '/') throw std::invalid_argument("bad angle '" + text + "'");
    divisor = std::stod(rest.substr(1));
  }
  return factor * cn::pi / divisor;
}

raman::SphericalPol parse_polarization(const std::string& text) {
  if (text == "sigma+") return raman::SphericalPol::sigma_plus();
  if (text == "sigma-") return raman::SphericalPol::sigma_minus();
  if (text == "pi") return raman::SphericalPol::pi();
  // explicit spherical components: re+1,im+1,re0,im0,re-1,im-1
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
  if (parts.size() != 6)
    throw std::invalid_argument("polarization must be sigma+|sigma-|pi or six numbers");
  raman::SphericalPol p{{Complex(parts[0], parts[1]), Complex(parts[2], parts[3]),
                         Complex(parts[4], parts[5])}};
  return p.normalized();
}

Eigen::Vector3d parse_direction(const std::string& text) {
  if (text == "x") return {1, 0, 0};
  if (text == "-x") return {-1, 0, 0};
  if (text == "y") return {0, 1, 0};
  if (text == "-y") return {0, -1, 0};
  if (text == "z") return {0, 0, 1};
  if (text == "-z") return {0, 0, -1};
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
  if (parts.size() != 3) throw std::invalid_argument("direction must be x|-x|y|-y|z|-z or dx,dy,dz");
  Eigen::Vector3d d(parts[0], parts[1], parts[2]);
  if (d.norm() == 0.0) throw std::invalid_argument("direction must be nonzero");
  return d.normalized();
}

atomic::LevelScheme load_scheme(const std::string& path) {
  if (path.empty()) return atomic::ca_level_scheme();
  return atomic::load_level_scheme(path);
}

// "4S1/2:-1/2" -> (term, mJ)
std::pair<std::string, HalfInt> parse_sublevel(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("sublevel must look like 4S1/2:-1/2");
  std::string mj = text.substr(colon + 1);
  if (!mj.empty() && mj[0] == '+') mj = mj.substr(1);
  return {text.substr(0, colon), parse_half_int(mj)};
}

// ---------------------------------------------------------------- states ---

ordered_json state_to_json(const dynamics::StateVector& s) {
  ordered_json doc;
  doc["n_ions"] = s.n_ions();
  doc["n_modes"] = s.n_modes();
  doc["n_max"] = s.n_max();
  doc["internal_dim"] = s.internal_dim();
  doc["amplitudes"] = ordered_json::array();
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] == Complex(0.0)) continue;
    doc["amplitudes"].push_back(
        {{"basis", s.label(i)}, {"amp", {s[i].real(), s[i].imag()}}});
  }
  return doc;
}

dynamics::StateVector state_from_json(const json& doc) {
  dynamics::StateVector s(doc.at("n_ions").get<int>(), doc.at("n_modes").get<int>(),
                          doc.at("n_max").get<int>(), doc.at("internal_dim").get<int>());
  for (const auto& entry : doc.at("amplitudes")) {
    const auto& amp = entry.at("amp");
    s[s.index_of_label(entry.at("basis").get<std::string>())] =
        Complex(amp.at(0).get<double>(), amp.at(1).get<double>());
  }
  return s;
}

dynamics::StateVector read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("state file is not valid JSON: ") + e.what());
  }
  return state_from_json(doc);
}

void print_state_text(std::ostream& out, const dynamics::StateVector& s) {
  out << "basis\tre\tim\tpopulation\n";
  for (int i = 0; i < s.size(); ++i) {
    const double pop = std::norm(s[i]);
    if (pop <= 1e-12) continue;
    out << s.label(i) << '\t' << num(s[i].real()) << '\t' << num(s[i].imag()) << '\t'
        << num(pop) << '\n';
  }
}

void emit_state(const dynamics::StateVector& s, const std::string& format,
                const std::string& out_path) {
  std::ostringstream text;
  if (format == "json")
    text << state_to_json(s).dump(2) << '\n';
  else
    print_state_text(text, s);
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write state file '" + out_path + "'");
    out << text.str();
  }
}

// ------------------------------------------------------------ subcommands ---

struct ModesArgs {
  int n = 2;
  std::string format = "csv";
};

int run_modes(const ModesArgs& args) {
  const auto positions = trapmodes::equilibrium_positions(args.n);
  const trapmodes::TrapConfig cfg{args.n, cn::two_pi * 1e6, cn::ca40_mass};
  const auto modes = trapmodes::mode_eigensystem(cfg);

  if (args.format == "json") {
    ordered_json doc;
    doc["n_ions"] = args.n;
    doc["positions"] = positions;
    doc["modes"] = ordered_json::array();
    for (int p = 0; p < args.n; ++p) {
      ordered_json mode;
      mode["mu"] = modes.mu(p);
      mode["b"] = std::vector<double>(modes.b.row(p).begin(), modes.b.row(p).end());
      doc["modes"].push_back(mode);
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
  }

  std::cout << "mode,mu";
  for (int s = 0; s < args.n; ++s) std::cout << ",b" << s + 1;
  std::cout << '\n';
  for (int p = 0; p < args.n; ++p) {
    std::cout << p + 1 << ',' << num(modes.mu(p));
    for (int s = 0; s < args.n; ++s) std::cout << ',' << num(modes.b(p, s));
    std::cout << '\n';
  }
  return 0;
}

struct BudgetArgs {
  std::string atomic_data;
  std::string format = "text";
  budget::BudgetConfig cfg;
};

int run_budget(const BudgetArgs& args) {
  const auto scheme = load_scheme(args.atomic_data);
  const auto rows = budget::budget_table(scheme, args.cfg);

  if (args.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& row : rows)
      doc.push_back({{"wavelength_nm", row.wavelength * 1e9},
                     {"power_w", row.power},
                     {"bandwidth_hz", row.bandwidth / cn::two_pi}});
    std::cout << doc.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "wavelength_nm,power_w,bandwidth_hz\n";
    for (const auto& row : rows)
      std::cout << num(row.wavelength * 1e9) << ',' << num(row.power) << ','
                << num(row.bandwidth / cn::two_pi) << '\n';
  } else {
    std::printf("%-14s %-22s %s\n", "wavelength", "power", "bandwidth");
    for (const auto& row : rows)
      std::printf("%-14s %-22s %s\n", (num(row.wavelength * 1e9) + " nm").c_str(),
                  (num(row.power) + " W").c_str(),
                  (num(row.bandwidth / cn::two_pi) + " Hz").c_str());
  }
  return 0;
}

struct CoolArgs {
  int n = 1;
  double nbar = 1.0;
  double wavelength_nm = 397.0;
  double mass_u = cn::ca40_mass / cn::atomic_mass_unit;
  std::string format = "text";
};

int run_cool(const CoolArgs& args) {
  const double bound = budget::sideband_bound(args.n, args.nbar, args.wavelength_nm * 1e-9,
                                              args.mass_u * cn::atomic_mass_unit);
  const double hz = bound / cn::two_pi;
  if (args.format == "json") {
    ordered_json doc{{"n_ions", args.n}, {"nbar", args.nbar}, {"bound_hz", hz}};
    std::cout << doc.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "bound_hz\n" << num(hz) << '\n';
  } else {
    std::cout << "sideband cooling needs omega_x well above " << num(hz) << " Hz\n";
  }
  return 0;
}

struct ZeemanArgs {
  double gauss = 1.0;
  std::string format = "text";
};

int run_zeeman(const ZeemanArgs& args) {
  const double hz = budget::zeeman_splitting(args.gauss) / cn::two_pi;
  if (args.format == "json") {
    ordered_json doc{{"b_gauss", args.gauss}, {"splitting_hz", hz}};
    std::cout << doc.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "splitting_hz\n" << num(hz) << '\n';
  } else {
    std::cout << "zeeman splitting: " << num(hz) << " Hz\n";
  }
  return 0;
}

struct BeamArgs {
  double power_w = 1e-3;
  double diameter_um = 100.0;
  std::string pol = "sigma+";
  std::string dir = "x";
  double phase = 0.0;
};

struct RabiArgs {
  std::string atomic_data;
  std::string scenario;
  std::string format = "text";
  double detuning_hz = 1e10;
  int n_ions = 10;
  double omega_x_hz = 1e6;
  int ion = -1;
  double b_gauss = 0.0;
  std::string qubit_lower = "4S1/2:-1/2";
  std::string qubit_upper = "4S1/2:1/2";
  std::string manifold = "4P1/2";
  BeamArgs pump;
  BeamArgs stokes{1e-3, 100.0, "pi", "-x", 0.0};
};

raman::LaserBeam make_beam(raman::LaserBeam::Role role, const BeamArgs& args, double omega) {
  raman::LaserBeam b;
  b.role = role;
  b.omega = omega;
  b.power = args.power_w;
  b.diameter = args.diameter_um * 1e-6;
  b.field = raman::field_from_power(b.power, b.diameter);
  b.pol = parse_polarization(args.pol);
  b.direction = parse_direction(args.dir);
  b.phase = args.phase;
  return b;
}

void beam_from_json(BeamArgs& args, const json& doc) {
  if (doc.contains("power_w")) args.power_w = doc["power_w"].get<double>();
  if (doc.contains("diameter_um")) args.diameter_um = doc["diameter_um"].get<double>();
  if (doc.contains("polarization")) args.pol = doc["polarization"].get<std::string>();
  if (doc.contains("direction")) {
    const auto& d = doc["direction"];
    if (d.is_string()) {
      args.dir = d.get<std::string>();
    } else {
      args.dir = num(d.at(0).get<double>()) + "," + num(d.at(1).get<double>()) + "," +
                 num(d.at(2).get<double>());
    }
  }
  if (doc.contains("phase_rad")) args.phase = doc["phase_rad"].get<double>();
}

int run_rabi(RabiArgs args) {
  if (!args.scenario.empty()) {
    std::ifstream in(args.scenario);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + args.scenario + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (doc.contains("atomic_data")) args.atomic_data = doc["atomic_data"].get<std::string>();
    if (doc.contains("detuning_hz")) args.detuning_hz = doc["detuning_hz"].get<double>();
    if (doc.contains("b_gauss")) args.b_gauss = doc["b_gauss"].get<double>();
    if (doc.contains("trap")) {
      const auto& trap = doc["trap"];
      if (trap.contains("n_ions")) args.n_ions = trap["n_ions"].get<int>();
      if (trap.contains("omega_x_hz")) args.omega_x_hz = trap["omega_x_hz"].get<double>();
      if (trap.contains("ion")) args.ion = trap["ion"].get<int>();
    }
    if (doc.contains("qubit")) {
      const auto& qubit = doc["qubit"];
      if (qubit.contains("lower")) args.qubit_lower = qubit["lower"].get<std::string>();
      if (qubit.contains("upper")) args.qubit_upper = qubit["upper"].get<std::string>();
      if (qubit.contains("manifold")) args.manifold = qubit["manifold"].get<std::string>();
    }
    if (doc.contains("pump")) beam_from_json(args.pump, doc["pump"]);
    if (doc.contains("stokes")) beam_from_json(args.stokes, doc["stokes"]);
  }

  const auto scheme = load_scheme(args.atomic_data);
  const double b_tesla = args.b_gauss * cn::gauss_to_tesla;

  const auto [lo_term, lo_mj] = parse_sublevel(args.qubit_lower);
  const auto [hi_term, hi_mj] = parse_sublevel(args.qubit_upper);
  const auto level0 = atomic::zeeman_shifted(scheme.level(lo_term, lo_mj), b_tesla);
  const auto level1 = atomic::zeeman_shifted(scheme.level(hi_term, hi_mj), b_tesla);
  std::vector<atomic::LevelState> upper;
  for (const auto& state : scheme.manifold(args.manifold))
    upper.push_back(atomic::zeeman_shifted(state, b_tesla));
  const auto& line = scheme.transition(lo_term, args.manifold);

  // pump sits `detuning` below the I -> manifold centroid; the stokes beam
  // closes the two-photon resonance at delta = 0
  double centroid = 0.0;
  for (const auto& state : upper) centroid += state.energy;
  centroid /= upper.size();
  const double omega_pump = centroid - level0.energy - cn::two_pi * args.detuning_hz;
  const double omega_stokes = omega_pump - (level1.energy - level0.energy);

  const auto pump = make_beam(raman::LaserBeam::Role::pump, args.pump, omega_pump);
  const auto stokes = make_beam(raman::LaserBeam::Role::stokes, args.stokes, omega_stokes);

  const trapmodes::TrapConfig trap{args.n_ions, cn::two_pi * args.omega_x_hz, cn::ca40_mass};
  const auto modes = trapmodes::mode_eigensystem(trap);
  const auto ld = raman::lamb_dicke(pump, stokes, trap, modes, args.ion);

  const auto coupling = raman::build_coupling(level0, level1, upper, line, pump, stokes);
  const auto shifts = raman::stark_shifts(coupling);
  const double delta_res = raman::resonance_delta(shifts.a, shifts.d);

  raman::PhononRegister vac{std::vector<int>(args.n_ions, 0)};
  raman::PhononRegister one = vac;
  one.occupation[0] = 1;
  const Complex f_v = raman::coupling_factor(vac, vac, ld, modes);
  const Complex f_u = raman::coupling_factor(vac, one, ld, modes);
  const Complex omega_v = raman::effective_rabi(coupling, f_v);
  const Complex omega_u = raman::effective_rabi(coupling, f_u);

  auto warnings = raman::perturbative_warnings(coupling);
  double min_det = std::abs(coupling.detuning[0]);
  for (double d : coupling.detuning) min_det = std::min(min_det, std::abs(d));
  if (trap.omega_x / min_det > 1e-2)
    warnings.push_back("omega_x / min detuning exceeds 1e-2; dropping phonon energies from "
                       "the Raman denominators is not safe here");

  if (args.format == "json") {
    ordered_json doc;
    doc["eta"] = ld.eta;
    doc["xi"] = ld.xi;
    doc["upper_levels"] = ordered_json::array();
    for (size_t k = 0; k < coupling.size(); ++k) {
      ordered_json entry;
      entry["term"] = upper[k].term;
      entry["mj"] = to_string(upper[k].mj);
      entry["detuning_hz"] = coupling.detuning[k] / cn::two_pi;
      entry["pump_rabi_hz"] = {coupling.pump_i[k].real() / cn::two_pi,
                               coupling.pump_i[k].imag() / cn::two_pi};
      entry["stokes_rabi_hz"] = {coupling.stokes_j[k].real() / cn::two_pi,
                                 coupling.stokes_j[k].imag() / cn::two_pi};
      doc["upper_levels"].push_back(entry);
    }
    doc["stark_a_hz"] = shifts.a / cn::two_pi;
    doc["stark_d_hz"] = shifts.d / cn::two_pi;
    doc["stark_b_hz"] = {shifts.b.real() / cn::two_pi, shifts.b.imag() / cn::two_pi};
    doc["resonance_delta_hz"] = delta_res / cn::two_pi;
    doc["f_carrier"] = {f_v.real(), f_v.imag()};
    doc["f_sideband"] = {f_u.real(), f_u.imag()};
    doc["omega_eff_carrier_hz"] = std::abs(omega_v) / cn::two_pi;
    doc["omega_eff_sideband_hz"] = std::abs(omega_u) / cn::two_pi;
    doc["warnings"] = warnings;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "lamb-dicke eta: " << num(ld.eta) << '\n';
    std::cout << "stark shifts A, D (Hz): " << num(shifts.a / cn::two_pi) << ", "
              << num(shifts.d / cn::two_pi) << '\n';
    std::cout << "resonance offset delta = A - D (Hz): " << num(delta_res / cn::two_pi) << '\n';
    std::cout << "carrier |f|: " << num(std::abs(f_v))
              << "  sideband |f|: " << num(std::abs(f_u)) << '\n';
    std::cout << "effective rabi, carrier (Hz): " << num(std::abs(omega_v) / cn::two_pi) << '\n';
    std::cout << "effective rabi, sideband (Hz): " << num(std::abs(omega_u) / cn::two_pi) << '\n';
    for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
  }
  return 0;
}

struct PulseArgs {
  std::string kind = "V";
  std::string theta = "pi";
  double phi = 0.0;
  double chi = 0.0;
  double common = 0.0;
  int ion = 0;
  int bus = 0;
  int level_lo = 0;
  int level_hi = 1;
  std::vector<double> xi;
  std::string state_in;
  std::string state_out;
  std::string sequence;
  int n_ions = 1, n_modes = 1, n_max = 4, internal_dim = 3;
  double theta_noise = 0.0;  // relative sigma of multiplicative timing noise
  unsigned seed = 0;
  std::string format = "text";
};

dynamics::PulseSpec pulse_from_args(const PulseArgs& args) {
  dynamics::PulseSpec p;
  p.kind = args.kind == "U" ? dynamics::PulseSpec::Kind::U : dynamics::PulseSpec::Kind::V;
  p.theta = parse_angle(args.theta);
  p.phi = args.phi;
  p.chi = args.chi;
  p.common_phase = args.common;
  p.bus_mode = args.bus;
  p.level_lo = args.level_lo;
  p.level_hi = args.level_hi;
  p.xi = args.xi;
  return p;
}

int run_pulse(const PulseArgs& args) {
  dynamics::StateVector state =
      args.state_in.empty()
          ? dynamics::StateVector::ground(args.n_ions, args.n_modes, args.n_max,
                                          args.internal_dim)
          : read_state(args.state_in);

  // multiplicative pulse-timing noise for sensitivity studies; seeded, so a
  // given command line stays reproducible
  std::mt19937 noise_gen(args.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  auto jitter = [&](dynamics::PulseSpec p) {
    if (args.theta_noise > 0.0) p.theta *= std::max(0.0, 1.0 + args.theta_noise * noise(noise_gen));
    return p;
  };

  if (!args.sequence.empty()) {
    std::ifstream in(args.sequence);
    if (!in) throw std::invalid_argument("cannot open sequence file '" + args.sequence + "'");
    json doc;
    in >> doc;
    for (const auto& entry : doc) {
      PulseArgs one = args;
      if (entry.contains("kind")) one.kind = entry["kind"].get<std::string>();
      if (entry.contains("theta")) {
        if (entry["theta"].is_string())
          one.theta = entry["theta"].get<std::string>();
        else
          one.theta = num(entry["theta"].get<double>());
      }
      if (entry.contains("phi")) one.phi = entry["phi"].get<double>();
      if (entry.contains("chi")) one.chi = entry["chi"].get<double>();
      if (entry.contains("common_phase")) one.common = entry["common_phase"].get<double>();
      if (entry.contains("bus_mode")) one.bus = entry["bus_mode"].get<int>();
      if (entry.contains("level_lo")) one.level_lo = entry["level_lo"].get<int>();
      if (entry.contains("level_hi")) one.level_hi = entry["level_hi"].get<int>();
      const int ion = entry.contains("ion") ? entry["ion"].get<int>() : args.ion;
      dynamics::apply_pulse(state, jitter(pulse_from_args(one)), ion);
    }
  } else {
    dynamics::apply_pulse(state, jitter(pulse_from_args(args)), args.ion);
  }

  emit_state(state, args.format, args.state_out);
  return 0;
}

struct GateArgs {
  int control = 0;
  int target = 1;
  int aux_level = 2;
  int bus = 0;
  std::vector<double> xi;
  std::string state_in;
  std::string state_out;
  int n_ions = 2, n_modes = 1, n_max = 2, internal_dim = 3;
  std::string format = "text";
};

int run_gate(const GateArgs& args) {
  dynamics::StateVector state =
      args.state_in.empty()
          ? dynamics::StateVector::ground(args.n_ions, args.n_modes, args.n_max,
                                          args.internal_dim)
          : read_state(args.state_in);
  dynamics::CzOptions opts;
  opts.bus_mode = args.bus;
  opts.aux_level = args.aux_level;
  opts.xi = args.xi;
  dynamics::cz_gate_sequence(state, args.control, args.target, opts);
  emit_state(state, args.format, args.state_out);
  return 0;
}

int run_validate() {
  int bad = 0;

  const auto disp = reference::check_displacement_closed_form(10, 0.5, 11, 60);
  const bool disp_ok = disp.max_element_error <= 1e-9;
  const bool unit_ok = disp.max_unitarity_defect <= 1e-9;
  std::cout << "displacement closed form vs operator exponential: max error "
            << num(disp.max_element_error) << (disp_ok ? " (ok)" : " (FAIL, tol 1e-9)") << '\n';
  std::cout << "displacement row unitarity: max defect " << num(disp.max_unitarity_defect)
            << (unit_ok ? " (ok)" : " (FAIL, tol 1e-9)") << '\n';
  bad += !disp_ok + !unit_ok;

  const auto adia = reference::check_adiabatic_elimination(100.0);
  const bool adia_ok = adia.max_population_error <= 1e-3;
  std::cout << "full integration vs closed-form propagator (Delta/Omega = 100): "
            << "max population error " << num(adia.max_population_error)
            << (adia_ok ? " (ok)" : " (FAIL, tol 1e-3)") << '\n';
  std::cout << "peak upper-manifold population: " << num(adia.max_upper_population) << '\n';
  bad += !adia_ok;

  std::cout << (bad == 0 ? "validation passed\n" : "validation FAILED\n");
  return bad == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Stimulated-Raman quantum logic toolkit for trapped Ca+-like ions"};
  app.require_subcommand(1);

  ModesArgs modes_args;
  auto* modes_cmd = app.add_subcommand("modes", "Chain normal modes as CSV");
  modes_cmd->add_option("--n", modes_args.n, "Number of ions")->required();
  modes_cmd->add_option("--format", modes_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  BudgetArgs budget_args;
  auto* budget_cmd = app.add_subcommand("budget", "Laser power budget table");
  budget_cmd->add_option("--atomic-data", budget_args.atomic_data, "Atomic data file")
      ->envname("IONRAMAN_ATOMIC_DATA");
  budget_cmd->add_option("--format", budget_args.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  double budget_rabi_hz = 1e6, budget_delta_hz = 1e10;
  budget_cmd->add_option("--rabi-hz", budget_rabi_hz, "Target Rabi frequency (Hz)");
  budget_cmd->add_option("--delta-hz", budget_delta_hz, "Raman detuning (Hz)");
  budget_cmd->add_option("--eta", budget_args.cfg.eta, "Lamb-Dicke parameter");
  budget_cmd->add_option("--n", budget_args.cfg.n_ions, "Number of ions");
  double d_logic_um = 10.0, d_broad_um = 100.0;
  budget_cmd->add_option("--d-logic-um", d_logic_um, "Addressed-ion spot diameter (um)");
  budget_cmd->add_option("--d-broad-um", d_broad_um, "Whole-chain spot diameter (um)");

  CoolArgs cool_args;
  auto* cool_cmd = app.add_subcommand("cool", "Sideband-cooling trap-frequency bound");
  cool_cmd->add_option("--n", cool_args.n, "Number of ions")->required();
  cool_cmd->add_option("--nbar", cool_args.nbar, "Mean phonon number")->required();
  cool_cmd->add_option("--wavelength-nm", cool_args.wavelength_nm, "Scattered wavelength (nm)");
  cool_cmd->add_option("--mass-u", cool_args.mass_u, "Ion mass (u)");
  cool_cmd->add_option("--format", cool_args.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  ZeemanArgs zeeman_args;
  auto* zeeman_cmd = app.add_subcommand("zeeman", "Zeeman splitting of resonance lines");
  zeeman_cmd->add_option("--gauss", zeeman_args.gauss, "Magnetic field (gauss)")->required();
  zeeman_cmd->add_option("--format", zeeman_args.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  RabiArgs rabi_args;
  auto* rabi_cmd = app.add_subcommand("rabi", "Raman couplings, Stark shifts and Omega_eff");
  rabi_cmd->add_option("--atomic-data", rabi_args.atomic_data, "Atomic data file")
      ->envname("IONRAMAN_ATOMIC_DATA");
  rabi_cmd->add_option("--scenario", rabi_args.scenario, "Scenario JSON file");
  rabi_cmd->add_option("--format", rabi_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  rabi_cmd->add_option("--detuning-hz", rabi_args.detuning_hz, "Raman detuning (Hz)");
  rabi_cmd->add_option("--n-ions", rabi_args.n_ions, "Number of ions");
  rabi_cmd->add_option("--omega-x-hz", rabi_args.omega_x_hz, "Axial trap frequency (Hz)");
  rabi_cmd->add_option("--ion", rabi_args.ion, "Designated ion (default: center)");
  rabi_cmd->add_option("--b-gauss", rabi_args.b_gauss, "Magnetic field (gauss)");
  rabi_cmd->add_option("--qubit-lower", rabi_args.qubit_lower, "e.g. 4S1/2:-1/2");
  rabi_cmd->add_option("--qubit-upper", rabi_args.qubit_upper, "e.g. 4S1/2:1/2");
  rabi_cmd->add_option("--manifold", rabi_args.manifold, "Upper manifold term");
  rabi_cmd->add_option("--pump-power-w", rabi_args.pump.power_w, "Pump power (W)");
  rabi_cmd->add_option("--pump-diameter-um", rabi_args.pump.diameter_um, "Pump spot (um)");
  rabi_cmd->add_option("--pump-pol", rabi_args.pump.pol, "sigma+|sigma-|pi or six numbers");
  rabi_cmd->add_option("--pump-dir", rabi_args.pump.dir, "x|-x|y|-y|z|-z or dx,dy,dz");
  rabi_cmd->add_option("--pump-phase-rad", rabi_args.pump.phase, "Pump optical phase");
  rabi_cmd->add_option("--stokes-power-w", rabi_args.stokes.power_w, "Stokes power (W)");
  rabi_cmd->add_option("--stokes-diameter-um", rabi_args.stokes.diameter_um, "Stokes spot (um)");
  rabi_cmd->add_option("--stokes-pol", rabi_args.stokes.pol, "sigma+|sigma-|pi or six numbers");
  rabi_cmd->add_option("--stokes-dir", rabi_args.stokes.dir, "x|-x|y|-y|z|-z or dx,dy,dz");
  rabi_cmd->add_option("--stokes-phase-rad", rabi_args.stokes.phase, "Stokes optical phase");

  PulseArgs pulse_args;
  auto* pulse_cmd = app.add_subcommand("pulse", "Apply one V/U pulse (or a sequence) to a state");
  pulse_cmd->add_option("--kind", pulse_args.kind, "V|U")->check(CLI::IsMember({"V", "U"}));
  pulse_cmd->add_option("--theta", pulse_args.theta, "Rotation angle (rad, or pi forms)");
  pulse_cmd->add_option("--phi", pulse_args.phi, "Pulse phase (rad)");
  pulse_cmd->add_option("--chi", pulse_args.chi, "AC Stark phase (rad)");
  pulse_cmd->add_option("--common-phase", pulse_args.common, "Common phase (rad)");
  pulse_cmd->add_option("--ion", pulse_args.ion, "Addressed ion");
  pulse_cmd->add_option("--bus", pulse_args.bus, "Bus mode for U pulses");
  pulse_cmd->add_option("--level-lo", pulse_args.level_lo, "Lower internal level");
  pulse_cmd->add_option("--level-hi", pulse_args.level_hi, "Upper internal level");
  pulse_cmd->add_option("--xi", pulse_args.xi, "Per-mode displacement amplitudes")->delimiter(',');
  pulse_cmd->add_option("--state-in", pulse_args.state_in, "Input state JSON");
  pulse_cmd->add_option("--state-out", pulse_args.state_out, "Output path (default stdout)");
  pulse_cmd->add_option("--sequence", pulse_args.sequence, "JSON list of pulses");
  pulse_cmd->add_option("--ions", pulse_args.n_ions, "Ions in a fresh ground state");
  pulse_cmd->add_option("--modes", pulse_args.n_modes, "Modes in a fresh ground state");
  pulse_cmd->add_option("--nmax", pulse_args.n_max, "Phonon truncation");
  pulse_cmd->add_option("--internal-dim", pulse_args.internal_dim, "Internal levels per ion");
  pulse_cmd->add_option("--theta-noise", pulse_args.theta_noise,
                        "Relative sigma of multiplicative timing noise");
  pulse_cmd->add_option("--seed", pulse_args.seed, "Noise seed");
  pulse_cmd->add_option("--format", pulse_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  GateArgs gate_args;
  auto* gate_cmd = app.add_subcommand("gate", "Controlled-phase pulse sequence");
  gate_cmd->add_option("--control", gate_args.control, "Control ion");
  gate_cmd->add_option("--target", gate_args.target, "Target ion");
  gate_cmd->add_option("--aux-level", gate_args.aux_level, "Auxiliary internal level");
  gate_cmd->add_option("--bus", gate_args.bus, "Bus mode");
  gate_cmd->add_option("--xi", gate_args.xi, "Per-mode displacement amplitudes")->delimiter(',');
  gate_cmd->add_option("--state-in", gate_args.state_in, "Input state JSON");
  gate_cmd->add_option("--state-out", gate_args.state_out, "Output path (default stdout)");
  gate_cmd->add_option("--ions", gate_args.n_ions, "Ions in a fresh ground state");
  gate_cmd->add_option("--modes", gate_args.n_modes, "Modes in a fresh ground state");
  gate_cmd->add_option("--nmax", gate_args.n_max, "Phonon truncation");
  gate_cmd->add_option("--internal-dim", gate_args.internal_dim, "Internal levels per ion");
  gate_cmd->add_option("--format", gate_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* validate_cmd = app.add_subcommand("validate", "Run the built-in oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (modes_cmd->parsed()) return run_modes(modes_args);
    if (budget_cmd->parsed()) {
      budget_args.cfg.rabi = cn::two_pi * budget_rabi_hz;
      budget_args.cfg.detuning = cn::two_pi * budget_delta_hz;
      budget_args.cfg.d_logic = d_logic_um * 1e-6;
      budget_args.cfg.d_broad = d_broad_um * 1e-6;
      return run_budget(budget_args);
    }
    if (cool_cmd->parsed()) return run_cool(cool_args);
    if (zeeman_cmd->parsed()) return run_zeeman(zeeman_args);
    if (rabi_cmd->parsed()) return run_rabi(rabi_args);
    if (pulse_cmd->parsed()) return run_pulse(pulse_args);
    if (gate_cmd->parsed()) return run_gate(gate_args);
    if (validate_cmd->parsed()) return run_validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ionraman::cli
