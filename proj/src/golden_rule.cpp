#include "exciton/golden_rule.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "exciton/constants.hpp"
#include "exciton/decay.hpp"

namespace exciton {

namespace {

constexpr double pass_threshold = 1e-7;
constexpr double inclusion_r_max = 0.999;

} // namespace

double gamma_golden_rule(const LatticeParams& params, double ka, const QuadratureSpec& spec) {
    spec.validate();
    const double ka_abs = std::fabs(ka);
    const ExcitonMode mode = dispersion(params, ka_abs);  // validates params and ka
    if (!(mode.energy_ev > 0.0))
        throw std::domain_error("exciton energy must be positive");

    const double q0 = mode.energy_ev / constants::hbar_c_ev_angstrom;  // photon momentum on shell, 1/A
    const double k = ka_abs / params.lattice_constant_angstrom;        // pinned parallel component, 1/A
    if (q0 < k)
        return 0.0;  // the energy shell supports no photon with this parallel momentum

    const double q_perp = std::sqrt(q0 * q0 - k * k);
    const double mu = params.dipole_e_angstrom;
    const double theta = params.theta_folded();
    const double transverse = q_perp * mu * std::sin(theta);
    const double axial = k * mu * std::cos(theta);
    const double q0_sq = q0 * q0;

    // Polarization sum mu^2 - |q.mu|^2 / q^2 on the shell, integrated over azimuth.
    auto integrand = [&](double phi) {
        const double projection = transverse * std::cos(phi) + axial;
        return mu * mu - projection * projection / q0_sq;
    };
    const double azimuthal = integrate(integrand, -constants::pi, constants::pi, spec);

    return constants::coulomb_ev_angstrom * q0_sq * azimuthal
         / (constants::hbar_ev_s * params.lattice_constant_angstrom);
}

ValidationReport validate_grid(const LatticeParams& params,
                               std::span<const double> ka_samples,
                               std::span<const double> theta_samples,
                               const QuadratureSpec& spec) {
    params.validate();
    spec.validate();

    ValidationReport report;
    report.points.reserve(ka_samples.size() * theta_samples.size());
    for (const double ka : ka_samples) {
        for (const double theta : theta_samples) {
            LatticeParams at_angle = params;
            at_angle.theta_rad = theta;

            ValidationPoint point;
            point.ka = ka;
            point.theta_deg = rad_to_deg(theta);
            const DecayResult closed = gamma_exciton(at_angle, ka, EvalMode::lightcone);
            point.gamma_formula = closed.gamma_per_s;
            point.included = closed.r <= inclusion_r_max;
            try {
                point.gamma_quad = gamma_golden_rule(at_angle, ka, spec);
                if (point.gamma_formula != 0.0)
                    point.rel_err = std::fabs(point.gamma_quad - point.gamma_formula)
                                  / std::fabs(point.gamma_formula);
                else
                    point.rel_err = point.gamma_quad == 0.0
                                  ? 0.0
                                  : std::numeric_limits<double>::infinity();
            } catch (const QuadratureError& e) {
                point.failed = true;
                point.error = e.what();
                point.gamma_quad = std::numeric_limits<double>::quiet_NaN();
                point.rel_err = std::numeric_limits<double>::quiet_NaN();
            }
            report.points.push_back(std::move(point));
        }
    }

    double max_err = 0.0, sum_err = 0.0;
    int counted = 0;
    bool failed_included = false;
    for (const ValidationPoint& point : report.points) {
        if (!point.included)
            continue;
        if (point.failed) {
            failed_included = true;
            continue;
        }
        max_err = std::max(max_err, point.rel_err);
        sum_err += point.rel_err;
        ++counted;
    }
    report.max_rel_err = max_err;
    report.mean_rel_err = counted > 0 ? sum_err / counted : 0.0;
    report.pass = !failed_included && max_err <= pass_threshold;
    return report;
}

std::pair<std::vector<double>, std::vector<double>> default_validation_grid() {
    constexpr int n = 20;
    std::vector<double> ka(n), theta(n);
    const double ka_lo = 0.01, ka_hi = 0.45;
    const double theta_lo = 0.0, theta_hi = 0.5 * constants::pi;
    for (int i = 0; i < n; ++i) {
        ka[i] = ka_lo + i * (ka_hi - ka_lo) / (n - 1);
        theta[i] = theta_lo + i * (theta_hi - theta_lo) / (n - 1);
    }
    return {std::move(ka), std::move(theta)};
}

std::string ValidationReport::to_json() const {
    nlohmann::ordered_json j;
    j["points"] = nlohmann::ordered_json::array();
    for (const ValidationPoint& point : points) {
        nlohmann::ordered_json p;
        p["ka"] = point.ka;
        p["theta_deg"] = point.theta_deg;
        p["gamma_quad"] = point.gamma_quad;
        p["gamma_formula"] = point.gamma_formula;
        p["rel_err"] = point.rel_err;
        if (point.failed)
            p["error"] = point.error;
        j["points"].push_back(std::move(p));
    }
    j["summary"] = {{"max_rel_err", max_rel_err},
                    {"mean_rel_err", mean_rel_err},
                    {"pass", pass}};
    return j.dump(2);
}

} // namespace exciton
