#include "ionraman/raman.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ionraman/constants.hpp"

namespace ionraman::raman {

namespace {

namespace cn = ionraman::constants;

const Eigen::Vector3cd kSpherical[3] = {
    Eigen::Vector3cd(-1.0 / std::sqrt(2.0), Complex(0, 1.0 / std::sqrt(2.0)), 0.0),  // q=+1
    Eigen::Vector3cd(0.0, 0.0, 1.0),                                                 // q=0
    Eigen::Vector3cd(1.0 / std::sqrt(2.0), Complex(0, 1.0 / std::sqrt(2.0)), 0.0),   // q=-1
};

int designated_ion(int ion, int n_ions) {
  if (ion < 0) return (n_ions - 1) / 2;  // center of the chain
  if (ion >= n_ions) throw std::invalid_argument("designated ion index out of range");
  return ion;
}

}  // namespace

Complex SphericalPol::component(int q) const {
  switch (q) {
    case 1: return comp[0];
    case 0: return comp[1];
    case -1: return comp[2];
    default: throw std::invalid_argument("spherical component index must be -1, 0 or +1");
  }
}

double SphericalPol::norm() const {
  return std::sqrt(std::norm(comp[0]) + std::norm(comp[1]) + std::norm(comp[2]));
}

SphericalPol SphericalPol::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize a zero polarization");
  return {{comp[0] / n, comp[1] / n, comp[2] / n}};
}

SphericalPol SphericalPol::from_cartesian(const Eigen::Vector3cd& v) {
  SphericalPol p;
  for (int i = 0; i < 3; ++i) p.comp[i] = kSpherical[i].dot(v);  // dot() conjugates the basis
  return p;
}

Eigen::Vector3cd SphericalPol::cartesian() const {
  Eigen::Vector3cd v = Eigen::Vector3cd::Zero();
  for (int i = 0; i < 3; ++i) v += comp[i] * kSpherical[i];
  return v;
}

Complex spherical_dot(int q, const SphericalPol& v) {
  // eps_q . eps_q' = (-1)^q delta_{q,-q'}
  const Complex c = v.component(-q);
  return q == 0 ? c : -c;
}

double LaserBeam::wavenumber() const { return omega / cn::light_speed; }

Eigen::Vector3d LaserBeam::wavevector() const { return wavenumber() * direction; }

double field_from_power(double power, double diameter) {
  if (power < 0) throw std::invalid_argument("beam power must be >= 0");
  if (!(diameter > 0)) throw std::invalid_argument("beam diameter must be > 0");
  const double e0_sq = 64.0 * power * cn::fine_structure * cn::hbar /
                       (cn::elementary_charge * cn::elementary_charge * diameter * diameter);
  return std::sqrt(e0_sq);
}

StarkShifts stark_shifts(const RamanCoupling& c) {
  const size_t n = c.size();
  if (c.pump_i.size() != n || c.stokes_i.size() != n || c.pump_j.size() != n ||
      c.stokes_j.size() != n)
    throw std::invalid_argument("stark_shifts: coupling arrays must share one length");

  StarkShifts out;
  for (size_t k = 0; k < n; ++k) {
    const double det = c.detuning[k];
    if (det == 0.0)
      throw std::runtime_error("stark_shifts: resonant intermediate level (zero detuning)");
    out.a += (std::norm(c.pump_i[k]) + std::norm(c.stokes_i[k])) / (4.0 * det);
    out.d += (std::norm(c.pump_j[k]) + std::norm(c.stokes_j[k])) / (4.0 * det);
    out.b += c.pump_i[k] * std::conj(c.stokes_j[k]) / (4.0 * det);
  }
  return out;
}

double resonance_delta(double a, double d) { return a - d; }

std::vector<std::string> perturbative_warnings(const RamanCoupling& c, double threshold) {
  std::vector<std::string> warnings;
  for (size_t k = 0; k < c.size(); ++k) {
    const double det = std::abs(c.detuning[k]);
    if (det == 0.0) continue;  // stark_shifts raises this case as an error
    const double worst = std::max({std::abs(c.pump_i[k]), std::abs(c.stokes_i[k]),
                                   std::abs(c.pump_j[k]), std::abs(c.stokes_j[k])});
    if (worst / det > threshold) {
      std::ostringstream msg;
      msg << "upper level " << k << ": |Omega/detuning| = " << worst / det
          << " exceeds " << threshold << "; perturbative result is unreliable";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

LambDicke lamb_dicke(const LaserBeam& pump, const LaserBeam& stokes,
                     const trapmodes::TrapConfig& cfg, const trapmodes::ModeSystem& modes,
                     int ion) {
  const Eigen::Vector3d dk = stokes.wavevector() - pump.wavevector();
  const double spread = std::sqrt(cn::hbar / (2.0 * cfg.mass * cfg.omega_x));
  const double eta = dk.x() * spread;  // projection onto the trap axis
  return lamb_dicke_from_eta(eta, modes, ion);
}

LambDicke lamb_dicke(const LaserBeam& pump, const LaserBeam& stokes,
                     const trapmodes::TrapConfig& cfg, int ion) {
  return lamb_dicke(pump, stokes, cfg, trapmodes::mode_eigensystem(cfg), ion);
}

LambDicke lamb_dicke_from_eta(double eta, const trapmodes::ModeSystem& modes, int ion) {
  const int n = static_cast<int>(modes.mu.size());
  const int s = designated_ion(ion, n);
  LambDicke ld;
  ld.eta = eta;
  ld.xi.resize(n);
  for (int p = 0; p < n; ++p)
    ld.xi[p] = eta * modes.b(p, s) / std::pow(modes.mu(p), 0.25);
  return ld;
}

Complex coupling_factor(const PhononRegister& m, const PhononRegister& n, const LambDicke& ld,
                        const trapmodes::ModeSystem& modes) {
  const size_t nm = static_cast<size_t>(modes.mu.size());
  if (m.occupation.size() != nm || n.occupation.size() != nm || ld.xi.size() != nm)
    throw std::invalid_argument("coupling_factor: registers must cover the same N modes");
  Complex f = 1.0;
  for (size_t p = 0; p < nm; ++p)
    f *= specfun::displacement_element(m.occupation[p], n.occupation[p], specfun::Xi{ld.xi[p]});
  return f;
}

Complex dipole_element(const atomic::LevelState& lower, const atomic::LevelState& upper,
                       const SphericalPol& pol, const atomic::Transition& trans) {
  const double k = trans.wavenumber;
  const double reduced = std::sqrt(3.0 * trans.decay_rate * (upper.j.twice + 1.0) /
                                   (4.0 * cn::light_speed * cn::fine_structure * k * k * k));
  Complex sum = 0.0;
  for (int q = -1; q <= 1; ++q) {
    const Complex weight = spherical_dot(q, pol);
    if (weight == Complex(0.0)) continue;
    sum += specfun::wigner3j(lower.j, HalfInt::from_int(1), upper.j, -lower.mj,
                             HalfInt::from_int(q), upper.mj) *
           weight;
  }
  return cn::elementary_charge * reduced * sum;
}

Complex beta_factor(const atomic::LevelState& level0, const atomic::LevelState& level1,
                    const atomic::LevelState& upper, const SphericalPol& pump_pol,
                    const SphericalPol& stokes_pol) {
  Complex sum = 0.0;
  for (int q = -1; q <= 1; ++q) {
    const Complex wp = spherical_dot(q, pump_pol);
    if (wp == Complex(0.0)) continue;
    const double tj0 = specfun::wigner3j(level0.j, HalfInt::from_int(1), upper.j, -level0.mj,
                                         HalfInt::from_int(q), upper.mj);
    if (tj0 == 0.0) continue;
    for (int qq = -1; qq <= 1; ++qq) {
      const Complex ws = std::conj(spherical_dot(qq, stokes_pol));
      if (ws == Complex(0.0)) continue;
      const double tj1 = specfun::wigner3j(level1.j, HalfInt::from_int(1), upper.j, -level1.mj,
                                           HalfInt::from_int(qq), upper.mj);
      sum += tj0 * tj1 * wp * ws;
    }
  }
  return 0.75 * (upper.j.twice + 1.0) * sum;
}

Complex effective_rabi(const RamanCoupling& c, Complex f) {
  Complex sum = 0.0;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c.detuning[k] == 0.0)
      throw std::runtime_error("effective_rabi: resonant intermediate level (zero detuning)");
    sum += c.pump_i[k] * std::conj(c.stokes_j[k]) / (4.0 * c.detuning[k]);
  }
  return sum * f;
}

RamanCoupling build_coupling(const atomic::LevelState& level0, const atomic::LevelState& level1,
                             const std::vector<atomic::LevelState>& upper_manifold,
                             const atomic::Transition& trans, const LaserBeam& pump,
                             const LaserBeam& stokes) {
  RamanCoupling c;
  const Complex pump_field = pump.field * std::exp(Complex(0.0, pump.phase));
  const Complex stokes_field = stokes.field * std::exp(Complex(0.0, stokes.phase));
  const double mean = 0.5 * (level0.energy + level1.energy + pump.omega + stokes.omega);
  for (const auto& up : upper_manifold) {
    c.pump_i.push_back(dipole_element(level0, up, pump.pol, trans) * pump_field / cn::hbar);
    c.stokes_i.push_back(dipole_element(level0, up, stokes.pol, trans) * stokes_field / cn::hbar);
    c.pump_j.push_back(dipole_element(level1, up, pump.pol, trans) * pump_field / cn::hbar);
    c.stokes_j.push_back(dipole_element(level1, up, stokes.pol, trans) * stokes_field / cn::hbar);
    c.detuning.push_back(up.energy - mean);
  }
  // delta > 0 when the pump-Stokes beat overshoots the bare qubit splitting
  c.delta = (pump.omega - stokes.omega) - (level1.energy - level0.energy);
  return c;
}

}  // namespace ionraman::raman
