#include "exciton/decay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exciton/constants.hpp"
#include "exciton/roots.hpp"

namespace exciton {

namespace {

constexpr double ka_root_tol = 1e-10;
constexpr double theta_root_tol = 1e-10;
constexpr int root_max_iter = 200;

double rate_prefactor_per_s(const LatticeParams& p, double energy_ev) {
    // mu^2 E^2 / (4 eps0 a hbar^3 c^2) expressed through e^2/(4 pi eps0).
    const double mu2 = p.dipole_e_angstrom * p.dipole_e_angstrom;
    return constants::pi * constants::coulomb_ev_angstrom * mu2 * energy_ev * energy_ev
         / (p.lattice_constant_angstrom * constants::hbar_c_ev_angstrom
            * constants::hbar_c_ev_angstrom * constants::hbar_ev_s);
}

} // namespace

std::string to_string(EvalMode mode) {
    return mode == EvalMode::formula ? "formula" : "lightcone";
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::superradiant: return "superradiant";
        case Regime::subradiant: return "subradiant";
        case Regime::dark: return "dark";
    }
    throw std::logic_error("unreachable regime");
}

EvalMode eval_mode_from_string(const std::string& s) {
    if (s == "formula") return EvalMode::formula;
    if (s == "lightcone") return EvalMode::lightcone;
    throw std::invalid_argument("unknown evaluation mode: " + s + " (expected formula or lightcone)");
}

Regime regime_from_string(const std::string& s) {
    if (s == "superradiant") return Regime::superradiant;
    if (s == "subradiant") return Regime::subradiant;
    if (s == "dark") return Regime::dark;
    throw std::invalid_argument("unknown regime: " + s);
}

double gamma_atom_per_s(const LatticeParams& params) {
    params.validate();
    // mu^2 E_a^3 / (3 pi eps0 hbar^4 c^3) = 4 K mu^2 E_a^3 / (3 (hbar c)^3 hbar)
    const double mu2 = params.dipole_e_angstrom * params.dipole_e_angstrom;
    const double ea = params.transition_energy_ev;
    const double hc3 = constants::hbar_c_ev_angstrom * constants::hbar_c_ev_angstrom
                     * constants::hbar_c_ev_angstrom;
    return 4.0 * constants::coulomb_ev_angstrom * mu2 * ea * ea * ea
         / (3.0 * hc3 * constants::hbar_ev_s);
}

BracketEval decay_bracket(const LatticeParams& params, double ka) {
    const double ka_abs = std::fabs(ka);
    const ExcitonMode mode = dispersion(params, ka_abs);
    if (!(mode.energy_ev > 0.0))
        throw std::domain_error("exciton energy must be positive");
    const double r = constants::hbar_c_ev_angstrom
                   * (ka_abs / params.lattice_constant_angstrom) / mode.energy_ev;
    const double c = std::cos(params.theta_folded());
    const double c2 = c * c;
    const double s2 = 1.0 - c2;
    const double bracket = 1.0 + c2 - r * r * (2.0 * c2 - s2);
    return {bracket, r, mode.energy_ev};
}

DecayResult gamma_exciton(const LatticeParams& params, double ka, EvalMode mode) {
    const BracketEval b = decay_bracket(params, ka);
    double gamma = rate_prefactor_per_s(params, b.energy_ev) * std::max(b.bracket, 0.0);
    if (mode == EvalMode::lightcone && b.r > 1.0)
        gamma = 0.0;  // no transverse photon momentum exists; empty delta support
    const double gamma_atom = gamma_atom_per_s(params);
    const double ratio = gamma_atom > 0.0 ? gamma / gamma_atom : 0.0;
    const Regime regime = gamma == 0.0 ? Regime::dark
                        : ratio > 1.0  ? Regime::superradiant
                                       : Regime::subradiant;
    return {gamma, gamma_atom, ratio, regime, mode, b.bracket, b.r};
}

CriticalK critical_ka(const LatticeParams& params) {
    params.validate();
    CriticalK result;
    result.theta_rad = params.theta_rad;

    const double c = std::cos(params.theta_folded());
    const double c2 = c * c;
    const double s2 = 1.0 - c2;
    if (2.0 * c2 - s2 <= 0.0)
        return result;  // at/beyond the magic angle the factor never reaches zero

    auto bracket_at = [&](double ka) { return decay_bracket(params, ka).bracket; };
    const double at_zone_edge = bracket_at(constants::pi);
    if (at_zone_edge > 0.0) {
        result.beyond_zone_edge = true;
        return result;
    }
    // bracket(0) = 1 + cos^2 > 0 and bracket(pi) <= 0: bisect.
    result.ka_c = bisect(bracket_at, 0.0, constants::pi, ka_root_tol, root_max_iter);
    return result;
}

std::optional<DarkWindow> dark_window(const LatticeParams& params, double ka) {
    params.validate();
    if (!(ka > 0.0) || !(ka <= constants::pi))
        throw std::domain_error("ka must lie in (0, pi]");

    auto bracket_at = [&](double theta) {
        LatticeParams swept = params;
        swept.theta_rad = theta;
        return decay_bracket(swept, ka).bracket;
    };
    // bracket(pi/2) = 1 + r^2 > 0 always; a window exists only if the factor
    // is negative at theta = 0.
    if (!(bracket_at(0.0) < 0.0))
        return std::nullopt;
    const auto root = bisect(bracket_at, 0.0, 0.5 * constants::pi, theta_root_tol, root_max_iter);
    if (!root)
        return std::nullopt;
    return DarkWindow{*root};
}

} // namespace exciton
