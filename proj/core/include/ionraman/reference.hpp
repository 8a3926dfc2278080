#pragma once

#include <Eigen/Dense>

namespace ionraman::reference {

// Brute-force displacement operator exp[i xi (a_dag + a)] on a Fock space
// truncated at `dim` levels, via eigendecomposition of the tridiagonal
// quadrature matrix. Shares no code with the closed form in specfun.
Eigen::MatrixXcd displacement_matrix(double xi, int dim);

struct DisplacementCheck {
  double max_element_error = 0.0;    // closed form vs brute force
  double max_unitarity_defect = 0.0; // |sum_n |<m|D|n>|^2 - 1|
};

// Scans m, n <= max_mn and a grid of |xi| <= xi_max (both signs).
DisplacementCheck check_displacement_closed_form(int max_mn = 10, double xi_max = 0.5,
                                                 int xi_steps = 11, int truncation = 60);

struct AdiabaticCheck {
  double ratio = 0.0;                  // Delta / Omega
  double max_population_error = 0.0;   // full integration vs closed form
  double max_upper_population = 0.0;   // max |b_k|^2 seen at checkpoints
  double pulse_duration = 0.0;         // s
};

// Canonical three-level benchmark: two lower levels driven through one far
// detuned upper level, pump and Stokes with slightly unequal strengths. The
// full integration is compared with the closed-form propagator at
// `checkpoints` evenly spaced times across a pi pulse.
AdiabaticCheck check_adiabatic_elimination(double delta_over_omega,
                                           double omega = 6.283185307179586e6,
                                           double stokes_ratio = 1.2, int checkpoints = 24);

}  // namespace ionraman::reference
