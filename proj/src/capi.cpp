#include "exciton1d.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <span>
#include <stdexcept>
#include <string>

#include "exciton/constants.hpp"
#include "exciton/decay.hpp"
#include "exciton/far_field.hpp"
#include "exciton/golden_rule.hpp"
#include "exciton/lattice.hpp"
#include "exciton/scan.hpp"
#include "exciton/version.hpp"

struct exc_model {
    exciton::LatticeParams params;
};

struct exc_scan_table {
    exciton::ScanTable table;
};

namespace {

thread_local std::string last_error;

struct CApiError : std::runtime_error {
    CApiError(exc_status status, const std::string& msg)
        : std::runtime_error(msg), status(status) {}
    exc_status status;
};

template <typename Fn>
exc_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return EXC_OK;
    } catch (const CApiError& e) {
        last_error = e.what();
        return e.status;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return EXC_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        last_error = e.what();
        return EXC_ERR_DOMAIN;
    } catch (const exciton::QuadratureError& e) {
        last_error = e.what();
        return EXC_ERR_NUMERIC;
    } catch (const std::exception& e) {
        last_error = e.what();
        return EXC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return EXC_ERR_INTERNAL;
    }
}

void require(bool ok, const char* msg) {
    if (!ok)
        throw CApiError(EXC_ERR_INVALID_ARGUMENT, msg);
}

char* make_owned_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

exciton::ExcitonState to_state(const exc_exciton_state& s) {
    exciton::ExcitonState state;
    state.amplitude0 = {s.amplitude0_re, s.amplitude0_im};
    state.population0 = s.population0;
    state.ka = s.ka;
    state.theta_rad = s.theta_rad;
    state.n_sites = s.n_sites;
    return state;
}

exciton::EvalMode to_mode(int mode) {
    if (mode == EXC_MODE_FORMULA) return exciton::EvalMode::formula;
    if (mode == EXC_MODE_LIGHTCONE) return exciton::EvalMode::lightcone;
    throw CApiError(EXC_ERR_INVALID_ARGUMENT, "mode must be EXC_MODE_FORMULA or EXC_MODE_LIGHTCONE");
}

exciton::QuadratureSpec to_quad_spec(const exc_quad_spec* spec) {
    exciton::QuadratureSpec out;
    if (spec) {
        out.rel_tol = spec->rel_tol;
        out.abs_tol = spec->abs_tol;
        out.max_subdivisions = spec->max_subdivisions;
    }
    return out;
}

void fill_summary(const exciton::ValidationReport& report, exc_validation_summary* summary,
                  char** json) {
    if (summary) {
        summary->max_rel_err = report.max_rel_err;
        summary->mean_rel_err = report.mean_rel_err;
        summary->pass = report.pass ? 1 : 0;
    }
    if (json)
        *json = make_owned_string(report.to_json());
}

} // namespace

extern "C" {

const char* exc_status_name(exc_status status) {
    switch (status) {
        case EXC_OK: return "ok";
        case EXC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case EXC_ERR_DOMAIN: return "domain error";
        case EXC_ERR_NUMERIC: return "numerical error";
        case EXC_ERR_IO: return "i/o error";
        case EXC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* exc_last_error(void) {
    return last_error.c_str();
}

const char* exc_version(void) {
    return exciton::version;
}

void exc_params_defaults(exc_params* params) {
    if (!params)
        return;
    const exciton::LatticeParams d;
    params->ea_ev = d.transition_energy_ev;
    params->a_angstrom = d.lattice_constant_angstrom;
    params->mu_e_angstrom = d.dipole_e_angstrom;
    params->theta_rad = d.theta_rad;
    params->neighbor_cutoff = d.neighbor_cutoff;
}

exc_status exc_model_create(const exc_params* params, exc_model** out) {
    return wrap([&] {
        require(params && out, "params and out must be non-null");
        exciton::LatticeParams p;
        p.transition_energy_ev = params->ea_ev;
        p.lattice_constant_angstrom = params->a_angstrom;
        p.dipole_e_angstrom = params->mu_e_angstrom;
        p.theta_rad = params->theta_rad;
        p.neighbor_cutoff = params->neighbor_cutoff;
        p.validate();
        *out = new exc_model{p};
    });
}

void exc_model_destroy(exc_model* model) {
    delete model;
}

exc_status exc_model_params(const exc_model* model, exc_params* out) {
    return wrap([&] {
        require(model && out, "model and out must be non-null");
        out->ea_ev = model->params.transition_energy_ev;
        out->a_angstrom = model->params.lattice_constant_angstrom;
        out->mu_e_angstrom = model->params.dipole_e_angstrom;
        out->theta_rad = model->params.theta_rad;
        out->neighbor_cutoff = model->params.neighbor_cutoff;
    });
}

exc_status exc_dipole_coupling_ev(const exc_model* model, double separation_angstrom,
                                  double* out_ev) {
    return wrap([&] {
        require(model && out_ev, "model and out must be non-null");
        *out_ev = exciton::dipole_coupling_ev(model->params, separation_angstrom);
    });
}

exc_status exc_dispersion_ev(const exc_model* model, double ka, double* out_ev) {
    return wrap([&] {
        require(model && out_ev, "model and out must be non-null");
        *out_ev = exciton::dispersion(model->params, ka).energy_ev;
    });
}

exc_status exc_band_edges_ev(const exc_model* model, double* out_min_ev, double* out_max_ev) {
    return wrap([&] {
        require(model && out_min_ev && out_max_ev, "model and outputs must be non-null");
        const auto [lo, hi] = exciton::band_edges_ev(model->params);
        *out_min_ev = lo;
        *out_max_ev = hi;
    });
}

exc_status exc_allowed_ka(int n_sites, double* out, size_t capacity, size_t* out_count) {
    return wrap([&] {
        const auto values = exciton::allowed_ka(n_sites);
        if (out_count)
            *out_count = values.size();
        if (!out)
            return;  // size query
        require(capacity >= values.size(), "output capacity too small (need n_sites+1 slots)");
        std::memcpy(out, values.data(), values.size() * sizeof(double));
    });
}

double exc_magic_angle_rad(void) { return exciton::magic_angle_rad(); }
double exc_deg_to_rad(double deg) { return exciton::deg_to_rad(deg); }
double exc_rad_to_deg(double rad) { return exciton::rad_to_deg(rad); }
double exc_energy_to_rate_rad_per_s(double energy_ev) { return exciton::energy_to_rate(energy_ev); }

exc_status exc_gamma_atom(const exc_model* model, double* out_per_s) {
    return wrap([&] {
        require(model && out_per_s, "model and out must be non-null");
        *out_per_s = exciton::gamma_atom_per_s(model->params);
    });
}

exc_status exc_gamma(const exc_model* model, double ka, int mode, exc_decay_result* out) {
    return wrap([&] {
        require(model && out, "model and out must be non-null");
        const exciton::DecayResult d = exciton::gamma_exciton(model->params, ka, to_mode(mode));
        out->gamma_per_s = d.gamma_per_s;
        out->gamma_atom_per_s = d.gamma_atom_per_s;
        out->ratio = d.ratio;
        out->regime = static_cast<int>(d.regime);
        out->mode = mode;
        out->bracket = d.bracket;
        out->r = d.r;
    });
}

exc_status exc_critical_ka(const exc_model* model, exc_critical_k* out) {
    return wrap([&] {
        require(model && out, "model and out must be non-null");
        const exciton::CriticalK c = exciton::critical_ka(model->params);
        out->present = c.ka_c.has_value() ? 1 : 0;
        out->beyond_zone_edge = c.beyond_zone_edge ? 1 : 0;
        out->ka_c = c.ka_c.value_or(0.0);
    });
}

exc_status exc_dark_window(const exc_model* model, double ka, exc_dark_window_result* out) {
    return wrap([&] {
        require(model && out, "model and out must be non-null");
        const auto window = exciton::dark_window(model->params, ka);
        out->present = window.has_value() ? 1 : 0;
        out->theta_star_rad = window ? window->theta_star_rad : 0.0;
    });
}

void exc_quad_spec_defaults(exc_quad_spec* spec) {
    if (!spec)
        return;
    const exciton::QuadratureSpec d;
    spec->rel_tol = d.rel_tol;
    spec->abs_tol = d.abs_tol;
    spec->max_subdivisions = d.max_subdivisions;
}

exc_status exc_gamma_golden_rule(const exc_model* model, double ka,
                                 const exc_quad_spec* spec, double* out_per_s) {
    return wrap([&] {
        require(model && out_per_s, "model and out must be non-null");
        *out_per_s = exciton::gamma_golden_rule(model->params, ka, to_quad_spec(spec));
    });
}

exc_status exc_validate_grid(const exc_model* model,
                             const double* ka_samples, size_t n_ka,
                             const double* theta_samples_rad, size_t n_theta,
                             const exc_quad_spec* spec,
                             exc_validation_summary* out_summary,
                             char** out_json) {
    return wrap([&] {
        require(model, "model must be non-null");
        require(ka_samples || n_ka == 0, "ka_samples must be non-null when n_ka > 0");
        require(theta_samples_rad || n_theta == 0, "theta_samples must be non-null when n_theta > 0");
        const auto report = exciton::validate_grid(
            model->params, std::span<const double>(ka_samples, n_ka),
            std::span<const double>(theta_samples_rad, n_theta), to_quad_spec(spec));
        fill_summary(report, out_summary, out_json);
    });
}

exc_status exc_validate_default(const exc_model* model, const exc_quad_spec* spec,
                                exc_validation_summary* out_summary, char** out_json) {
    return wrap([&] {
        require(model, "model must be non-null");
        const auto [ka, theta] = exciton::default_validation_grid();
        const auto report = exciton::validate_grid(model->params, ka, theta, to_quad_spec(spec));
        fill_summary(report, out_summary, out_json);
    });
}

void exc_string_free(char* s) {
    std::free(s);
}

exc_status exc_farfield_warnings(const exc_model* model, const exc_exciton_state* state,
                                 const exc_field_point* pt, unsigned* out_warnings) {
    return wrap([&] {
        require(model && state && pt && out_warnings, "all arguments must be non-null");
        *out_warnings = exciton::far_field_warnings(
            model->params, to_state(*state), {pt->rho_angstrom, pt->z_angstrom, pt->t_s});
    });
}

exc_status exc_field_amplitude(const exc_model* model, const exc_exciton_state* state,
                               const exc_field_point* pt, double* out_re, double* out_im) {
    return wrap([&] {
        require(model && state && pt && out_re && out_im, "all arguments must be non-null");
        const std::complex<double> field = exciton::field_amplitude_v_per_m(
            model->params, to_state(*state), {pt->rho_angstrom, pt->z_angstrom, pt->t_s});
        *out_re = field.real();
        *out_im = field.imag();
    });
}

exc_status exc_intensity(const exc_model* model, const exc_exciton_state* state,
                         const exc_field_point* pt, double* out_v2_per_m2) {
    return wrap([&] {
        require(model && state && pt && out_v2_per_m2, "all arguments must be non-null");
        *out_v2_per_m2 = exciton::intensity_v2_per_m2(
            model->params, to_state(*state), {pt->rho_angstrom, pt->z_angstrom, pt->t_s});
    });
}

double exc_intensity_to_watts_per_m2(double intensity_v2_per_m2) {
    return exciton::intensity_to_watts_per_m2(intensity_v2_per_m2);
}

exc_status exc_intensity_trace(const exc_model* model, const exc_exciton_state* state,
                               double rho_angstrom, double z_angstrom,
                               const double* t_s, size_t n_t, double* out_v2_per_m2) {
    return wrap([&] {
        require(model && state && out_v2_per_m2, "model, state and out must be non-null");
        require(t_s || n_t == 0, "time grid must be non-null when n_t > 0");
        const auto trace = exciton::intensity_trace(
            model->params, to_state(*state), rho_angstrom, z_angstrom,
            std::span<const double>(t_s, n_t));
        std::memcpy(out_v2_per_m2, trace.intensity_v2_per_m2.data(), n_t * sizeof(double));
    });
}

exc_status exc_intensity_trace_csv(const exc_model* model, const exc_exciton_state* state,
                                   double rho_angstrom, double z_angstrom,
                                   const double* t_s, size_t n_t, char** out_csv) {
    return wrap([&] {
        require(model && state && out_csv, "model, state and out must be non-null");
        require(t_s || n_t == 0, "time grid must be non-null when n_t > 0");
        const auto trace = exciton::intensity_trace(
            model->params, to_state(*state), rho_angstrom, z_angstrom,
            std::span<const double>(t_s, n_t));
        *out_csv = make_owned_string(trace.to_csv());
    });
}

exc_status exc_intensity_trace_json(const exc_model* model, const exc_exciton_state* state,
                                    double rho_angstrom, double z_angstrom,
                                    const double* t_s, size_t n_t, char** out_json) {
    return wrap([&] {
        require(model && state && out_json, "model, state and out must be non-null");
        require(t_s || n_t == 0, "time grid must be non-null when n_t > 0");
        const auto trace = exciton::intensity_trace(
            model->params, to_state(*state), rho_angstrom, z_angstrom,
            std::span<const double>(t_s, n_t));
        *out_json = make_owned_string(trace.to_json());
    });
}

exc_status exc_scan(const exc_model* model, const exc_scan_spec* spec, exc_scan_table** out) {
    return wrap([&] {
        require(model && spec && out, "model, spec and out must be non-null");
        exciton::ScanSpec s;
        s.axis = spec->axis == EXC_AXIS_KA ? exciton::ScanAxis::ka : exciton::ScanAxis::theta;
        require(spec->axis == EXC_AXIS_KA || spec->axis == EXC_AXIS_THETA,
                "axis must be EXC_AXIS_KA or EXC_AXIS_THETA");
        s.fixed_value = spec->fixed_value;
        s.lo = spec->lo;
        s.hi = spec->hi;
        s.steps = spec->steps;
        s.mode = to_mode(spec->mode);
        s.include_atom_reference = spec->include_atom_reference != 0;
        *out = new exc_scan_table{exciton::scan(model->params, s)};
    });
}

void exc_scan_table_destroy(exc_scan_table* table) {
    delete table;
}

size_t exc_scan_table_rows(const exc_scan_table* table) {
    return table ? table->table.rows.size() : 0;
}

exc_status exc_scan_table_row(const exc_scan_table* table, size_t index,
                              double* out_swept, double* out_gamma_per_s,
                              double* out_ratio, int* out_regime) {
    return wrap([&] {
        require(table, "table must be non-null");
        require(index < table->table.rows.size(), "row index out of range");
        const exciton::ScanRow& row = table->table.rows[index];
        if (out_swept) *out_swept = row.swept_value;
        if (out_gamma_per_s) *out_gamma_per_s = row.gamma_per_s;
        if (out_ratio) *out_ratio = row.ratio;
        if (out_regime) *out_regime = static_cast<int>(row.regime);
    });
}

exc_status exc_scan_table_gamma_atom(const exc_scan_table* table, double* out_per_s) {
    return wrap([&] {
        require(table && out_per_s, "table and out must be non-null");
        require(table->table.spec.include_atom_reference,
                "table was built without the atom reference");
        *out_per_s = table->table.gamma_atom_per_s;
    });
}

exc_status exc_scan_table_csv(const exc_scan_table* table, char** out_csv) {
    return wrap([&] {
        require(table && out_csv, "table and out must be non-null");
        *out_csv = make_owned_string(table->table.to_csv());
    });
}

exc_status exc_scan_table_json(const exc_scan_table* table, char** out_json) {
    return wrap([&] {
        require(table && out_json, "table and out must be non-null");
        *out_json = make_owned_string(table->table.to_json());
    });
}

exc_status exc_scan_table_write(const exc_scan_table* table, const char* path, int as_json) {
    return wrap([&] {
        require(table && path, "table and path must be non-null");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw CApiError(EXC_ERR_IO, std::string("cannot open for writing: ") + path);
        out << (as_json ? table->table.to_json() : table->table.to_csv());
        if (!out)
            throw CApiError(EXC_ERR_IO, std::string("write failed: ") + path);
    });
}

exc_status exc_figures_write(const exc_model* model, const char* dir) {
    return wrap([&] {
        require(model && dir, "model and dir must be non-null");
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw CApiError(EXC_ERR_IO, "cannot create directory: " + std::string(dir));
        const auto bundle = exciton::figure_bundle(model->params);
        for (const auto& [name, table] : bundle) {
            const auto path = std::filesystem::path(dir) / (name + ".csv");
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw CApiError(EXC_ERR_IO, "cannot open for writing: " + path.string());
            out << table.to_csv();
            if (!out)
                throw CApiError(EXC_ERR_IO, "write failed: " + path.string());
        }
    });
}

} // extern "C"
