#include "exciton/far_field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "exciton/constants.hpp"
#include "exciton/decay.hpp"
#include "exciton/format.hpp"

namespace exciton {

namespace {

struct ModeEvaluation {
    double omega_rad_per_s;
    double gamma_per_s;
    double energy_ev;
};

// Frequency and damping rate of the state's mode; geometry and dipole come
// from params, the mode coordinates (ka, theta) from the state.
ModeEvaluation evaluate_mode(const LatticeParams& params, const ExcitonState& state) {
    LatticeParams at_state = params;
    at_state.theta_rad = state.theta_rad;
    const double energy = dispersion(at_state, state.ka).energy_ev;
    const double gamma = gamma_exciton(at_state, state.ka, EvalMode::formula).gamma_per_s;
    return {energy_to_rate(energy), gamma, energy};
}

void require_observation_point(const FieldPoint& pt) {
    if (!(pt.rho_angstrom > 0.0) || !std::isfinite(pt.rho_angstrom))
        throw std::domain_error("rho must be positive and finite");
    if (!std::isfinite(pt.z_angstrom) || !std::isfinite(pt.t_s))
        throw std::domain_error("observation point must be finite");
}

} // namespace

void ExcitonState::validate() const {
    if (!std::isfinite(amplitude0.real()) || !std::isfinite(amplitude0.imag()))
        throw std::invalid_argument("initial amplitude must be finite");
    if (!(population0 >= 0.0) || !std::isfinite(population0))
        throw std::invalid_argument("initial population must be non-negative and finite");
    if (!(std::fabs(ka) <= constants::pi))
        throw std::invalid_argument("state ka must lie in [-pi, pi]");
    if (!(theta_rad >= 0.0 && theta_rad <= constants::pi))
        throw std::invalid_argument("state theta must lie in [0, pi]");
    if (n_sites < 1)
        throw std::invalid_argument("site count must be at least 1");
}

unsigned far_field_warnings(const LatticeParams& params, const ExcitonState& state,
                            const FieldPoint& pt) {
    params.validate();
    state.validate();
    unsigned warnings = 0;
    if (std::fabs(state.ka) > 0.1)
        warnings |= warn_ka_large;
    LatticeParams at_state = params;
    at_state.theta_rad = state.theta_rad;
    const double energy = dispersion(at_state, state.ka).energy_ev;
    const double wavelength_angstrom = 2.0 * constants::pi * constants::hbar_c_ev_angstrom / energy;
    if (pt.rho_angstrom < 10.0 * wavelength_angstrom)
        warnings |= warn_rho_near_field;
    return warnings;
}

std::complex<double> field_amplitude_v_per_m(const LatticeParams& params,
                                             const ExcitonState& state,
                                             const FieldPoint& pt) {
    params.validate();
    state.validate();
    require_observation_point(pt);

    const ModeEvaluation mode = evaluate_mode(params, state);
    const double rho_m = pt.rho_angstrom * constants::angstrom_to_m;
    const double t_retarded = pt.t_s - rho_m / constants::c_si;
    if (t_retarded < 0.0)
        return {0.0, 0.0};  // nothing arrives before the onset

    const double mu_si = params.dipole_e_angstrom * constants::e_angstrom_to_coulomb_m;
    const double a_si = params.lattice_constant_angstrom * constants::angstrom_to_m;
    const double magnitude =
        mu_si * std::pow(mode.omega_rad_per_s, 1.5) * std::cos(state.theta_rad)
        / (4.0 * constants::pi * constants::eps0_si * a_si * std::pow(constants::c_si, 1.5))
        * std::sqrt(constants::pi / (state.n_sites * rho_m));

    const std::complex<double> evolution =
        state.amplitude0
        * std::polar(std::exp(-0.5 * mode.gamma_per_s * t_retarded),
                     -mode.omega_rad_per_s * t_retarded);
    const double z_phase = state.ka * (pt.z_angstrom / params.lattice_constant_angstrom);
    return std::complex<double>(1.0, 1.0) * magnitude * evolution
         * std::polar(1.0, z_phase);
}

double intensity_v2_per_m2(const LatticeParams& params, const ExcitonState& state,
                           const FieldPoint& pt) {
    params.validate();
    state.validate();
    require_observation_point(pt);

    const ModeEvaluation mode = evaluate_mode(params, state);
    const double rho_m = pt.rho_angstrom * constants::angstrom_to_m;
    const double t_retarded = pt.t_s - rho_m / constants::c_si;
    if (t_retarded < 0.0)
        return 0.0;

    const double mu_si = params.dipole_e_angstrom * constants::e_angstrom_to_coulomb_m;
    const double a_si = params.lattice_constant_angstrom * constants::angstrom_to_m;
    const double base = mu_si * std::cos(state.theta_rad) / (4.0 * constants::eps0_si * a_si);
    const double omega3 = mode.omega_rad_per_s * mode.omega_rad_per_s * mode.omega_rad_per_s;
    const double c3 = constants::c_si * constants::c_si * constants::c_si;
    return base * base * 2.0 * omega3 / (state.n_sites * constants::pi * rho_m * c3)
         * state.population0 * std::exp(-mode.gamma_per_s * t_retarded);
}

double intensity_to_watts_per_m2(double intensity_v2_per_m2) {
    // 2 eps0 c for the normally-ordered intensity, 1/2 from cycle averaging.
    return 2.0 * constants::eps0_si * constants::c_si * intensity_v2_per_m2 * 0.5;
}

IntensityTrace intensity_trace(const LatticeParams& params, const ExcitonState& state,
                               double rho_angstrom, double z_angstrom,
                               std::span<const double> t_grid) {
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] >= t_grid[i - 1]))
            throw std::domain_error("time grid must be sorted ascending");

    IntensityTrace trace;
    trace.t_s.reserve(t_grid.size());
    trace.intensity_v2_per_m2.reserve(t_grid.size());
    for (const double t : t_grid) {
        trace.t_s.push_back(t);
        trace.intensity_v2_per_m2.push_back(
            intensity_v2_per_m2(params, state, {rho_angstrom, z_angstrom, t}));
    }
    return trace;
}

std::string IntensityTrace::to_csv() const {
    std::ostringstream out;
    out << "t_s,intensity_V2_per_m2\n";
    for (size_t i = 0; i < t_s.size(); ++i)
        out << sci9(t_s[i]) << ',' << sci9(intensity_v2_per_m2[i]) << '\n';
    return out.str();
}

std::string IntensityTrace::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "trace/1";
    j["t_s"] = t_s;
    j["intensity_V2_per_m2"] = intensity_v2_per_m2;
    return j.dump(2);
}

} // namespace exciton
