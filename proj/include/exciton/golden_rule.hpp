#pragma once

#include <span>
#include <string>
#include <vector>

#include "exciton/lattice.hpp"
#include "exciton/quadrature.hpp"

namespace exciton {

/// Fermi-golden-rule damping rate recomputed by quadrature, independently of
/// the closed form. The photon momentum parallel to the lattice is pinned to
/// the exciton wave number; the radial part of the final-state sum collapses
/// on the energy shell q0 = E_ex / (hbar c) analytically (zero when q0 < |k|,
/// empty support), leaving the azimuthal polarization integral
///   integral over phi of [mu^2 - (q'0 mu sin(theta) cos(phi) + k mu cos(theta))^2 / q0^2]
/// with q'0 = sqrt(q0^2 - k^2), evaluated numerically.
/// Throws QuadratureError when the requested tolerance cannot be met.
double gamma_golden_rule(const LatticeParams& params, double ka,
                         const QuadratureSpec& spec = {});

struct ValidationPoint {
    double ka;
    double theta_deg;
    double gamma_quad;
    double gamma_formula;
    double rel_err;
    bool failed = false;     // quadrature did not converge at this point
    std::string error;       // failure detail, empty otherwise
    bool included = false;   // counts toward the pass criterion (r <= 0.999)
};

struct ValidationReport {
    std::vector<ValidationPoint> points;
    double max_rel_err = 0.0;   // over included points
    double mean_rel_err = 0.0;  // over included points
    bool pass = false;

    std::string to_json() const;
};

/// Per-point comparison of the quadrature rate against the closed form in
/// lightcone mode. Points with r <= 0.999 count toward the pass criterion
/// (max rel. err <= 1e-7); nearer the light-cone edge the comparison is
/// 0-vs-0 noise and is reported but excluded. Quadrature failures are
/// recorded per point without aborting the grid.
ValidationReport validate_grid(const LatticeParams& params,
                               std::span<const double> ka_samples,
                               std::span<const double> theta_samples,
                               const QuadratureSpec& spec = {});

/// The default validation grid: 20x20 over ka in [0.01, 0.45],
/// theta in [0, pi/2].
std::pair<std::vector<double>, std::vector<double>> default_validation_grid();

} // namespace exciton
