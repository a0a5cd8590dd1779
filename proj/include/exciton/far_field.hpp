#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "exciton/lattice.hpp"

namespace exciton {

/// Initial expectation values of one exciton mode. The state owns the mode
/// coordinates (ka, theta); geometry and dipole magnitude come from
/// LatticeParams.
struct ExcitonState {
    std::complex<double> amplitude0;  // <B_k(0)>
    double population0 = 0.0;         // <B_k^dag(0) B_k(0)>, >= 0
    double ka = 0.0;
    double theta_rad = 0.0;
    int n_sites = 1;

    void validate() const;
};

/// Observation point (rho, 0, z) in cylindrical coordinates about the lattice
/// axis, and laboratory time. rho must be positive; the far-field expressions
/// diverge on the axis.
struct FieldPoint {
    double rho_angstrom;
    double z_angstrom;
    double t_s;
};

enum FarFieldWarning : unsigned {
    warn_ka_large = 1u,        // |ka| > 0.1, outside the long-wavelength validity
    warn_rho_near_field = 2u,  // rho < 10 wavelengths, near-field terms not negligible
};

/// Validity flags for a proposed evaluation; advisory only, evaluation
/// proceeds regardless.
unsigned far_field_warnings(const LatticeParams& params, const ExcitonState& state,
                            const FieldPoint& pt);

/// Retarded far-field amplitude (z component, V/m) of the decaying exciton:
/// zero before the onset t = rho/c, afterwards
///   (1+i) mu w^{3/2} cos(theta) / (4 pi eps0 a c^{3/2}) sqrt(pi/(N rho))
///   * <B_k(0)> e^{-i w tau} e^{-Gamma tau / 2} e^{i k z},   tau = t - rho/c.
/// Gamma comes from gamma_exciton in formula mode.
std::complex<double> field_amplitude_v_per_m(const LatticeParams& params,
                                             const ExcitonState& state,
                                             const FieldPoint& pt);

/// Normally-ordered intensity expectation <E^- E^+> in (V/m)^2: zero before
/// the onset, afterwards
///   (mu cos(theta) / (4 eps0 a))^2 * 2 w^3 / (N pi rho c^3)
///   * population0 * e^{-Gamma tau}.
double intensity_v2_per_m2(const LatticeParams& params, const ExcitonState& state,
                           const FieldPoint& pt);

/// Power flux in W/m^2: 2 eps0 c <E^- E^+> times the cycle-average factor 1/2.
double intensity_to_watts_per_m2(double intensity_v2_per_m2);

struct IntensityTrace {
    std::vector<double> t_s;
    std::vector<double> intensity_v2_per_m2;

    std::string to_csv() const;   // columns: t_s,intensity_V2_per_m2
    std::string to_json() const;
};

/// Intensity sampled on an ascending time grid at fixed (rho, z).
/// Non-increasing after the onset.
IntensityTrace intensity_trace(const LatticeParams& params, const ExcitonState& state,
                               double rho_angstrom, double z_angstrom,
                               std::span<const double> t_grid);

} // namespace exciton
