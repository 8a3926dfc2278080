#pragma once

#include <complex>

#include "ionraman/halfint.hpp"

namespace ionraman::specfun {

// Wigner 3j symbol (j1 j2 j3; m1 m2 m3).
//
// Evaluated with the Racah sum over exact big-integer factorials; the result
// is converted to double only at the end, so there is no cancellation between
// large alternating terms. Returns exactly 0 when m1+m2+m3 != 0 or the
// triangle rule fails; throws std::invalid_argument for malformed (j, m)
// pairs (negative j, |m| > j, or 2m/2j parity mismatch).
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// Associated Laguerre polynomial L^a_n(x), a >= 0, n >= 0, via the upward
// three-term recurrence (stable for the x > 1 arguments that defeat the
// direct alternating series).
double laguerre(int a, int n, double x);

// Dimensionless displacement amplitude of one normal mode as seen by one ion.
struct Xi {
  double value = 0.0;
};

// <m| exp[i xi (a_dag + a)] |n> in the harmonic-oscillator number basis,
// closed form: sqrt(min!/max!) |xi|^|n-m| L^|n-m|_min(xi^2) exp(-xi^2/2)
// exp(i Phi_mn), with Phi_mn = pi [n + min + sgn(xi)(m-n)/2].
//
// The Gaussian factor is exp(-xi^2/2); the +xi^2/2 variant seen in some
// sources breaks row unitarity (verified against the brute-force operator
// exponential in reference.hpp). The quarter-turn phase convention is the
// one that matches that same brute-force operator.
std::complex<double> displacement_element(int m, int n, Xi xi);

}  // namespace ionraman::specfun
