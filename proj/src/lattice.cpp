#include "exciton/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "exciton/constants.hpp"
#include "exciton/roots.hpp"

namespace exciton {

namespace {

// hbar*J without the parameter re-validation of the public entry point.
double coupling_ev_unchecked(const LatticeParams& p, double separation_angstrom) {
    const double mu = p.dipole_e_angstrom;
    const double c = std::cos(p.theta_folded());
    const double l3 = separation_angstrom * separation_angstrom * separation_angstrom;
    return constants::coulomb_ev_angstrom * mu * mu / l3 * (1.0 - 3.0 * c * c);
}

double dispersion_ev_unchecked(const LatticeParams& p, double ka_abs) {
    double e = p.transition_energy_ev;
    for (int n = 1; n <= p.neighbor_cutoff; ++n) {
        const double shell = static_cast<double>(n) * p.lattice_constant_angstrom;
        e += 2.0 * coupling_ev_unchecked(p, shell) * std::cos(static_cast<double>(n) * ka_abs);
    }
    return e;
}

void require_ka_in_zone(double ka) {
    if (!(std::fabs(ka) <= constants::pi))
        throw std::domain_error("ka outside [-pi, pi]; fold into the first Brillouin zone");
}

} // namespace

void LatticeParams::validate() const {
    if (!(transition_energy_ev > 0.0) || !std::isfinite(transition_energy_ev))
        throw std::invalid_argument("transition energy must be positive and finite");
    if (!(lattice_constant_angstrom > 0.0) || !std::isfinite(lattice_constant_angstrom))
        throw std::invalid_argument("lattice constant must be positive and finite");
    if (!(dipole_e_angstrom >= 0.0) || !std::isfinite(dipole_e_angstrom))
        throw std::invalid_argument("transition dipole must be non-negative and finite");
    if (!(theta_rad >= 0.0 && theta_rad <= constants::pi))
        throw std::invalid_argument("theta must lie in [0, pi] radians");
    if (neighbor_cutoff < 1)
        throw std::invalid_argument("neighbor cutoff must be at least 1");
}

double LatticeParams::theta_folded() const {
    // For theta >= pi/2 the subtraction pi - theta is exact (Sterbenz), so a
    // mirrored pair (theta, pi - theta) lands on the same double.
    return theta_rad > 0.5 * constants::pi ? constants::pi - theta_rad : theta_rad;
}

double dipole_coupling_ev(const LatticeParams& params, double separation_angstrom) {
    params.validate();
    if (!(separation_angstrom > 0.0) || !std::isfinite(separation_angstrom))
        throw std::domain_error("separation must be positive and finite");
    return coupling_ev_unchecked(params, separation_angstrom);
}

ExcitonMode dispersion(const LatticeParams& params, double ka) {
    params.validate();
    require_ka_in_zone(ka);
    return {ka, dispersion_ev_unchecked(params, std::fabs(ka)), params.theta_rad};
}

std::pair<double, double> band_edges_ev(const LatticeParams& params) {
    params.validate();
    // Even in ka, so search [0, pi]. Dense sampling brackets the extrema; a
    // golden-section pass refines them. With one shell the extrema sit at the
    // sampled endpoints 0 and pi and the refinement is a no-op.
    constexpr int n_samples = 4096;
    const double step = constants::pi / n_samples;
    auto energy = [&](double ka) { return dispersion_ev_unchecked(params, ka); };

    int i_min = 0, i_max = 0;
    double e_min = energy(0.0), e_max = e_min;
    for (int i = 1; i <= n_samples; ++i) {
        const double e = energy(i * step);
        if (e < e_min) { e_min = e; i_min = i; }
        if (e > e_max) { e_max = e; i_max = i; }
    }

    auto refine = [&](int i_best, double sign) {
        const double lo = std::max(0.0, (i_best - 1) * step);
        const double hi = std::min(constants::pi, (i_best + 1) * step);
        const double ka = golden_min([&](double x) { return sign * energy(x); }, lo, hi, 1e-12);
        return energy(ka);
    };
    e_min = std::min(e_min, refine(i_min, +1.0));
    e_max = std::max(e_max, refine(i_max, -1.0));
    return {e_min, e_max};
}

std::vector<double> allowed_ka(int n_sites) {
    if (n_sites < 2)
        throw std::domain_error("site count must be at least 2");
    if (n_sites % 2 != 0)
        throw std::domain_error("site count must be even (the grid includes the +-N/2 zone-edge points)");
    const int half = n_sites / 2;
    std::vector<double> out(static_cast<size_t>(n_sites) + 1);
    out[half] = 0.0;
    for (int p = 1; p <= half; ++p) {
        const double v = (p == half) ? constants::pi
                                     : 2.0 * constants::pi * p / n_sites;
        out[half + p] = v;
        out[half - p] = -v;
    }
    return out;
}

double magic_angle_rad() {
    return std::acos(1.0 / std::sqrt(3.0));
}

} // namespace exciton
