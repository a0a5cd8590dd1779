#pragma once

#include <numbers>

// Internal unit system: energies in eV, lengths in Angstrom, times in seconds.
// SI units appear only at the rate / field output boundary, which keeps
// intermediate products within a sane exponent range.

namespace exciton::constants {

// CODATA 2018 values, hard-coded to full printed precision.
inline constexpr double hbar_c_ev_angstrom = 1973.269804;     // hbar*c
inline constexpr double coulomb_ev_angstrom = 14.399645;      // e^2/(4 pi eps0)
inline constexpr double hbar_si = 1.054571817e-34;            // J s
inline constexpr double c_si = 299792458.0;                   // m/s (exact)
inline constexpr double ev_to_joule = 1.602176634e-19;        // J/eV (exact)
inline constexpr double eps0_si = 8.8541878128e-12;           // F/m
inline constexpr double e_angstrom_to_coulomb_m = ev_to_joule * 1e-10;
inline constexpr double angstrom_to_m = 1e-10;
inline constexpr double hbar_ev_s = hbar_si / ev_to_joule;    // eV s

inline constexpr double pi = std::numbers::pi;

} // namespace exciton::constants

namespace exciton {

/// Angular frequency (rad/s) of a transition with energy `energy_ev`.
inline double energy_to_rate(double energy_ev) {
    return energy_ev * constants::ev_to_joule / constants::hbar_si;
}

inline double ev_to_joule(double energy_ev) { return energy_ev * constants::ev_to_joule; }
inline double joule_to_ev(double energy_j) { return energy_j / constants::ev_to_joule; }

inline double deg_to_rad(double deg) { return deg * constants::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / constants::pi; }

} // namespace exciton
