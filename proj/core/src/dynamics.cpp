#include "ionraman/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "ionraman/constants.hpp"
#include "ionraman/specfun.hpp"

namespace ionraman::dynamics {

PulseSpec make_pulse(PulseSpec::Kind kind, double theta, Complex omega_eff, double stark_a,
                     double stark_d) {
  if (theta < 0) throw std::invalid_argument("make_pulse: theta must be >= 0");
  PulseSpec p;
  p.kind = kind;
  p.theta = theta;
  if (theta > 0) {
    const double mag = std::abs(omega_eff);
    if (mag == 0.0)
      throw std::invalid_argument("make_pulse: zero effective Rabi frequency for theta > 0");
    p.duration = theta / (2.0 * mag);
  }
  const double delta = stark_a - stark_d;  // resonance condition
  p.chi = p.duration * delta / 2.0;
  p.common_phase = (stark_a + stark_d) * p.duration / 2.0;
  p.phi = std::arg(omega_eff) + p.chi;
  return p;
}

Eigen::Matrix2cd two_level_propagator(const PulseSpec& pulse) {
  const double half = 0.5 * pulse.theta;
  const double c = std::cos(half), s = std::sin(half);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << std::exp(i * pulse.chi) * c, i * std::exp(i * pulse.phi) * s,
      i * std::exp(-i * pulse.phi) * s, std::exp(-i * pulse.chi) * c;
  return std::exp(i * pulse.common_phase) * u;
}

StateVector::StateVector(int n_ions, int n_modes, int n_max, int internal_dim)
    : n_ions_(n_ions), n_modes_(n_modes), n_max_(n_max), internal_dim_(internal_dim) {
  if (n_ions < 1 || n_modes < 0 || n_max < 0 || internal_dim < 2)
    throw std::invalid_argument("StateVector: need n_ions >= 1, n_modes >= 0, n_max >= 0, "
                                "internal_dim >= 2");
  double dim = std::pow(static_cast<double>(internal_dim), n_ions) *
               std::pow(static_cast<double>(n_max + 1), n_modes);
  if (dim > 5e7) throw std::invalid_argument("StateVector: basis too large");
  phonon_dim_ = 1;
  for (int p = 0; p < n_modes; ++p) phonon_dim_ *= n_max + 1;
  int internal_dim_total = 1;
  for (int q = 0; q < n_ions; ++q) internal_dim_total *= internal_dim;
  amp_.assign(static_cast<size_t>(internal_dim_total) * phonon_dim_, Complex(0.0));
}

StateVector StateVector::ground(int n_ions, int n_modes, int n_max, int internal_dim) {
  StateVector s(n_ions, n_modes, n_max, internal_dim);
  s.amp_[0] = 1.0;
  return s;
}

int StateVector::index(std::span<const int> internal, std::span<const int> phonon) const {
  if (static_cast<int>(internal.size()) != n_ions_ ||
      static_cast<int>(phonon.size()) != n_modes_)
    throw std::invalid_argument("StateVector::index: wrong register sizes");
  int iq = 0;
  for (int q = 0; q < n_ions_; ++q) {
    if (internal[q] < 0 || internal[q] >= internal_dim_)
      throw std::invalid_argument("StateVector::index: internal level out of range");
    iq = iq * internal_dim_ + internal[q];
  }
  int ip = 0;
  for (int p = 0; p < n_modes_; ++p) {
    if (phonon[p] < 0 || phonon[p] > n_max_)
      throw std::invalid_argument("StateVector::index: phonon occupation out of range");
    ip = ip * (n_max_ + 1) + phonon[p];
  }
  return iq * phonon_dim_ + ip;
}

void StateVector::decode(int idx, std::vector<int>& internal, std::vector<int>& phonon) const {
  internal.assign(n_ions_, 0);
  phonon.assign(n_modes_, 0);
  int ip = idx % phonon_dim_;
  int iq = idx / phonon_dim_;
  for (int p = n_modes_ - 1; p >= 0; --p) {
    phonon[p] = ip % (n_max_ + 1);
    ip /= n_max_ + 1;
  }
  for (int q = n_ions_ - 1; q >= 0; --q) {
    internal[q] = iq % internal_dim_;
    iq /= internal_dim_;
  }
}

std::string StateVector::label(int idx) const {
  std::vector<int> internal, phonon;
  decode(idx, internal, phonon);
  std::string out = "q:";
  for (int q : internal) out += static_cast<char>('0' + q);
  out += "|ph:";
  for (int n : phonon) {
    if (n > 9) throw std::runtime_error("StateVector::label: occupations above 9 not printable");
    out += static_cast<char>('0' + n);
  }
  return out;
}

int StateVector::index_of_label(const std::string& label) const {
  const auto bar = label.find('|');
  if (label.rfind("q:", 0) != 0 || bar == std::string::npos ||
      label.compare(bar, 4, "|ph:") != 0)
    throw std::invalid_argument("bad basis label '" + label + "' (expected q:..|ph:..)");
  const std::string qpart = label.substr(2, bar - 2);
  const std::string ppart = label.substr(bar + 4);
  if (static_cast<int>(qpart.size()) != n_ions_ || static_cast<int>(ppart.size()) != n_modes_)
    throw std::invalid_argument("basis label '" + label + "' does not match register sizes");
  std::vector<int> internal, phonon;
  for (char ch : qpart) internal.push_back(ch - '0');
  for (char ch : ppart) phonon.push_back(ch - '0');
  return index(internal, phonon);
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

double StateVector::bus_excited_population(int bus_mode) const {
  if (bus_mode < 0 || bus_mode >= n_modes_)
    throw std::invalid_argument("bus_excited_population: bus mode out of range");
  double pop = 0.0;
  std::vector<int> internal, phonon;
  for (int idx = 0; idx < size(); ++idx) {
    if (amp_[idx] == Complex(0.0)) continue;
    decode(idx, internal, phonon);
    if (phonon[bus_mode] > 0) pop += std::norm(amp_[idx]);
  }
  return pop;
}

namespace {

// displacement elements per mode, diagonal <n|D|n> and lowering <n+1|D|n>
struct DisplacementTables {
  std::vector<std::vector<Complex>> diag;
  std::vector<std::vector<Complex>> lower;
};

DisplacementTables tabulate(const std::vector<double>& xi, int n_modes, int n_max) {
  DisplacementTables t;
  t.diag.resize(n_modes);
  t.lower.resize(n_modes);
  for (int p = 0; p < n_modes; ++p) {
    t.diag[p].resize(n_max + 1);
    t.lower[p].resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      t.diag[p][n] = specfun::displacement_element(n, n, specfun::Xi{xi[p]});
      t.lower[p][n] = specfun::displacement_element(n + 1, n, specfun::Xi{xi[p]});
    }
  }
  return t;
}

}  // namespace

void apply_pulse(StateVector& state, const PulseSpec& pulse, int ion) {
  if (ion < 0 || ion >= state.n_ions()) throw std::invalid_argument("apply_pulse: bad ion index");
  if (pulse.level_lo == pulse.level_hi || pulse.level_lo < 0 || pulse.level_hi < 0 ||
      pulse.level_lo >= state.internal_dim() || pulse.level_hi >= state.internal_dim())
    throw std::invalid_argument("apply_pulse: bad internal level pair");
  const bool sideband = pulse.kind == PulseSpec::Kind::U;
  if (sideband && state.n_modes() == 0)
    throw std::invalid_argument("apply_pulse: U pulse needs at least one mode");
  if (sideband && (pulse.bus_mode < 0 || pulse.bus_mode >= state.n_modes()))
    throw std::invalid_argument("apply_pulse: bus mode out of range");

  const bool exact = !pulse.xi.empty();
  if (exact && static_cast<int>(pulse.xi.size()) != state.n_modes())
    throw std::invalid_argument("apply_pulse: xi list must cover every mode");
  DisplacementTables tables;
  if (exact) tables = tabulate(pulse.xi, state.n_modes(), state.n_max());

  // truncation check: a U pulse pairs (hi, n_max) with a state beyond the cutoff
  if (sideband) {
    double spill = 0.0;
    std::vector<int> internal, phonon;
    for (int idx = 0; idx < state.size(); ++idx) {
      if (state[idx] == Complex(0.0)) continue;
      state.decode(idx, internal, phonon);
      if (internal[ion] == pulse.level_hi && phonon[pulse.bus_mode] == state.n_max())
        spill += std::norm(state[idx]);
    }
    if (spill > 1e-12) {
      std::ostringstream msg;
      msg << "apply_pulse: population " << spill << " at the phonon truncation edge (n_max="
          << state.n_max() << "); raise n_max";
      throw std::runtime_error(msg.str());
    }
  }

  Complex f_nominal(1.0);
  if (exact) {
    f_nominal = sideband ? tables.lower[pulse.bus_mode][0] : Complex(1.0);
    for (int p = 0; p < state.n_modes(); ++p) {
      if (sideband && p == pulse.bus_mode) continue;
      f_nominal *= tables.diag[p][0];
    }
    if (f_nominal == Complex(0.0))
      throw std::runtime_error("apply_pulse: nominal coupling factor vanishes for this xi");
  }

  const Complex i(0.0, 1.0);
  const Complex common = std::exp(i * pulse.common_phase);
  const Complex diag_p = std::exp(i * pulse.chi);
  const Complex diag_m = std::exp(-i * pulse.chi);

  std::vector<int> internal, phonon;
  for (int idx = 0; idx < state.size(); ++idx) {
    state.decode(idx, internal, phonon);
    if (internal[ion] != pulse.level_lo) continue;
    if (sideband && phonon[pulse.bus_mode] < 1) continue;  // no red-sideband partner

    std::vector<int> internal_hi = internal;
    internal_hi[ion] = pulse.level_hi;
    std::vector<int> phonon_hi = phonon;
    if (sideband) phonon_hi[pulse.bus_mode] -= 1;
    const int partner = state.index(internal_hi, phonon_hi);

    Complex scale(1.0);
    if (exact) {
      Complex f = sideband ? tables.lower[pulse.bus_mode][phonon_hi[pulse.bus_mode]]
                           : Complex(1.0);
      for (int p = 0; p < state.n_modes(); ++p) {
        if (sideband && p == pulse.bus_mode) continue;
        f *= tables.diag[p][phonon[p]];
      }
      scale = f / f_nominal;
    } else if (sideband) {
      scale = std::sqrt(static_cast<double>(phonon[pulse.bus_mode]));
    }

    const double half = 0.5 * pulse.theta * std::abs(scale);
    const double c = std::cos(half), s = std::sin(half);
    const Complex phase = std::exp(i * (pulse.phi + std::arg(scale)));

    const Complex a = state[idx];      // lower member of the pair
    const Complex b = state[partner];  // upper member
    state[idx] = common * (diag_p * c * a + i * phase * s * b);
    state[partner] = common * (i * std::conj(phase) * s * a + diag_m * c * b);
  }
}

void cz_gate_sequence(StateVector& state, int control, int target, const CzOptions& opts) {
  if (control == target) throw std::invalid_argument("cz_gate_sequence: control == target");
  if (control < 0 || control >= state.n_ions() || target < 0 || target >= state.n_ions())
    throw std::invalid_argument("cz_gate_sequence: ion index out of range");
  if (state.internal_dim() < 3 || opts.aux_level < 2 || opts.aux_level >= state.internal_dim())
    throw std::invalid_argument("cz_gate_sequence: needs an auxiliary internal level");
  if (state.n_modes() < 1 || state.n_max() < 1)
    throw std::invalid_argument("cz_gate_sequence: needs a bus mode with n_max >= 1");

  const double hot = state.bus_excited_population(opts.bus_mode);
  if (hot > opts.bus_vacuum_tol) {
    std::ostringstream msg;
    msg << "cz_gate_sequence precondition violated: phonon bus population outside |vac> is "
        << hot << " (tolerance " << opts.bus_vacuum_tol << ")";
    throw std::runtime_error(msg.str());
  }

  PulseSpec map_pulse;  // U pi on the control: qubit |1> <-> one bus phonon
  map_pulse.kind = PulseSpec::Kind::U;
  map_pulse.theta = constants::pi;
  map_pulse.bus_mode = opts.bus_mode;
  map_pulse.xi = opts.xi;

  PulseSpec loop_pulse = map_pulse;  // 2 pi loop through the auxiliary level
  loop_pulse.theta = 2.0 * constants::pi;
  loop_pulse.level_hi = opts.aux_level;

  apply_pulse(state, map_pulse, control);
  apply_pulse(state, loop_pulse, target);
  apply_pulse(state, map_pulse, control);
}

double MultiLevelSystem::norm() const {
  double sum = 0.0;
  for (const auto& a : lower) sum += std::norm(a);
  for (const auto& b : upper) sum += std::norm(b);
  return std::sqrt(sum);
}

MultiLevelSystem integrate_full(const MultiLevelSystem& system, double duration, double dt) {
  const size_t nl = system.lower.size();
  const size_t nu = system.upper.size();
  if (nl == 0 || nu == 0)
    throw std::invalid_argument("integrate_full: empty manifold");
  double max_det = 0.0;
  for (const auto& beam : system.beams) {
    if (beam.rabi.rows() != static_cast<Eigen::Index>(nl) ||
        beam.rabi.cols() != static_cast<Eigen::Index>(nu) ||
        beam.detuning.rows() != static_cast<Eigen::Index>(nl) ||
        beam.detuning.cols() != static_cast<Eigen::Index>(nu))
      throw std::invalid_argument("integrate_full: beam matrices must be (lower x upper)");
    max_det = std::max(max_det, beam.detuning.cwiseAbs().maxCoeff());
  }
  if (!(dt > 0)) throw std::invalid_argument("integrate_full: dt must be > 0");
  if (dt * max_det > 0.1)
    throw std::invalid_argument("integrate_full: dt does not resolve the largest detuning "
                                "(need dt * max|Delta| <= 0.1)");
  if (duration < 0) throw std::invalid_argument("integrate_full: negative duration");

  using state_type = std::vector<Complex>;
  state_type y(nl + nu);
  std::copy(system.lower.begin(), system.lower.end(), y.begin());
  std::copy(system.upper.begin(), system.upper.end(), y.begin() + nl);

  const double initial_norm = system.norm();

  auto rhs = [&](const state_type& s, state_type& dsdt, double t) {
    const Complex ihalf(0.0, 0.5);
    std::fill(dsdt.begin(), dsdt.end(), Complex(0.0));
    for (const auto& beam : system.beams) {
      for (size_t j = 0; j < nl; ++j) {
        for (size_t k = 0; k < nu; ++k) {
          const Complex omega = beam.rabi(j, k);
          if (omega == Complex(0.0)) continue;
          const Complex osc = std::exp(Complex(0.0, -beam.detuning(j, k) * t));
          dsdt[j] += ihalf * omega * osc * s[nl + k];
          dsdt[nl + k] += ihalf * std::conj(omega * osc) * s[j];
        }
      }
    }
  };

  namespace ode = boost::numeric::odeint;
  using stepper_type = ode::runge_kutta_dopri5<state_type>;
  try {
    ode::integrate_adaptive(ode::make_controlled<stepper_type>(1e-12, 1e-12), rhs, y,
                            system.time, system.time + duration, dt);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("integrate_full: integration failed: ") + e.what());
  }

  MultiLevelSystem out = system;
  std::copy(y.begin(), y.begin() + nl, out.lower.begin());
  std::copy(y.begin() + nl, y.end(), out.upper.begin());
  out.time = system.time + duration;

  if (std::abs(out.norm() - initial_norm) > 1e-8)
    throw std::runtime_error("integrate_full: norm drifted beyond 1e-8; reduce tolerances");
  return out;
}

}  // namespace ionraman::dynamics
