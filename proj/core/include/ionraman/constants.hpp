#pragma once

namespace ionraman::constants {

// CODATA 2018, SI units.
inline constexpr double planck = 6.62607015e-34;            // J s (exact)
inline constexpr double hbar = 1.054571817e-34;             // J s
inline constexpr double light_speed = 299792458.0;          // m/s (exact)
inline constexpr double fine_structure = 7.2973525693e-3;   // dimensionless
inline constexpr double bohr_magneton = 9.2740100783e-24;   // J/T
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double gauss_to_tesla = 1e-4;

// Mass of the most abundant calcium isotope, 40Ca (39.962590866 u).
inline constexpr double ca40_mass = 39.962590866 * atomic_mass_unit;

}  // namespace ionraman::constants
