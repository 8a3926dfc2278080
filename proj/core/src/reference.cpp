#include "ionraman/reference.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ionraman/constants.hpp"
#include "ionraman/dynamics.hpp"
#include "ionraman/specfun.hpp"

namespace ionraman::reference {

using Complex = std::complex<double>;

Eigen::MatrixXcd displacement_matrix(double xi, int dim) {
  if (dim < 1) throw std::invalid_argument("displacement_matrix: dim >= 1");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    const double v = std::sqrt(n + 1.0);
    x(n, n + 1) = v;
    x(n + 1, n) = v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x);
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i)
    phases(i) = std::exp(Complex(0.0, xi * solver.eigenvalues()(i)));
  return vecs * phases.asDiagonal() * vecs.transpose();
}

DisplacementCheck check_displacement_closed_form(int max_mn, double xi_max, int xi_steps,
                                                 int truncation) {
  if (truncation < max_mn + 10)
    throw std::invalid_argument("check_displacement_closed_form: truncation too small");
  DisplacementCheck out;
  for (int step = 0; step < xi_steps; ++step) {
    for (int sign = -1; sign <= 1; sign += 2) {
      const double xi = sign * xi_max * (step + 1) / xi_steps;
      const Eigen::MatrixXcd exact = displacement_matrix(xi, truncation);
      for (int m = 0; m <= max_mn; ++m) {
        double row = 0.0;
        for (int n = 0; n < truncation; ++n) {
          const Complex closed = specfun::displacement_element(m, n, specfun::Xi{xi});
          row += std::norm(closed);
          if (n <= max_mn)
            out.max_element_error =
                std::max(out.max_element_error, std::abs(closed - exact(m, n)));
        }
        out.max_unitarity_defect = std::max(out.max_unitarity_defect, std::abs(row - 1.0));
      }
    }
  }
  return out;
}

AdiabaticCheck check_adiabatic_elimination(double delta_over_omega, double omega,
                                           double stokes_ratio, int checkpoints) {
  if (!(delta_over_omega > 1.0))
    throw std::invalid_argument("check_adiabatic_elimination: Delta/Omega must exceed 1");

  const double omega_pump = omega;
  const double omega_stokes = stokes_ratio * omega;
  const double detuning = delta_over_omega * omega;

  // light shifts and the imposed two-photon resonance offset
  const double stark_a = omega_pump * omega_pump / (4.0 * detuning);
  const double stark_d = omega_stokes * omega_stokes / (4.0 * detuning);
  const double delta = stark_a - stark_d;
  const double omega_eff = omega_pump * omega_stokes / (4.0 * detuning);

  // delta = Delta_stokes - Delta_pump with both legs straddling the mean
  dynamics::MultiLevelSystem sys;
  sys.lower = {Complex(1.0), Complex(0.0)};
  sys.upper = {Complex(0.0)};
  dynamics::MultiLevelSystem::BeamCoupling pump, stokes;
  pump.rabi = Eigen::MatrixXcd::Zero(2, 1);
  pump.detuning = Eigen::MatrixXd::Constant(2, 1, detuning - delta / 2.0);
  pump.rabi(0, 0) = omega_pump;
  stokes.rabi = Eigen::MatrixXcd::Zero(2, 1);
  stokes.detuning = Eigen::MatrixXd::Constant(2, 1, detuning + delta / 2.0);
  stokes.rabi(1, 0) = omega_stokes;
  sys.beams = {pump, stokes};

  const double t_pi = constants::pi / (2.0 * omega_eff);
  const double dt = 0.05 / (detuning + std::abs(delta));

  AdiabaticCheck out;
  out.ratio = delta_over_omega;
  out.pulse_duration = t_pi;

  for (int step = 1; step <= checkpoints; ++step) {
    const double target = t_pi * step / checkpoints;
    sys = dynamics::integrate_full(sys, target - sys.time, dt);

    dynamics::PulseSpec pulse;
    pulse.theta = 2.0 * omega_eff * target;
    pulse.chi = target * delta / 2.0;
    pulse.common_phase = (stark_a + stark_d) * target / 2.0;
    pulse.phi = pulse.chi;  // arg(Omega_eff) = 0 here
    const Eigen::Matrix2cd u = dynamics::two_level_propagator(pulse);
    const Complex a_i = u(0, 0);  // initial state (1, 0)
    const Complex a_j = u(1, 0);

    out.max_population_error =
        std::max({out.max_population_error, std::abs(std::norm(sys.lower[0]) - std::norm(a_i)),
                  std::abs(std::norm(sys.lower[1]) - std::norm(a_j))});
    out.max_upper_population = std::max(out.max_upper_population, std::norm(sys.upper[0]));
  }
  return out;
}

}  // namespace ionraman::reference
