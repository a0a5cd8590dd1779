// Command-line front end for the exciton1d shared library. Talks to the
// library exclusively through the C API in exciton1d.h.
//
// Exit codes: 0 ok, 1 validation failure, 2 usage/domain error, 3 numerical.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exciton1d.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

std::string sci9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

int status_to_exit(exc_status status) {
    switch (status) {
        case EXC_OK: return exit_ok;
        case EXC_ERR_NUMERIC: return exit_numeric;
        case EXC_ERR_INVALID_ARGUMENT:
        case EXC_ERR_DOMAIN: return exit_usage;
        default: return exit_numeric;
    }
}

// Prints the library's error detail, naming the flags the failed input came from.
int fail(const std::string& flags, exc_status status) {
    std::cerr << "error (" << flags << "): " << exc_last_error() << "\n";
    return status_to_exit(status);
}

struct ModelHandle {
    exc_model* ptr = nullptr;
    ~ModelHandle() { exc_model_destroy(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { exc_string_free(ptr); }
};

struct TableHandle {
    exc_scan_table* ptr = nullptr;
    ~TableHandle() { exc_scan_table_destroy(ptr); }
};

// Shared parameter flags; defaults are the standard set E_a = 1 eV,
// a = 1000 A, mu = 1 eA.
struct ParamFlags {
    double ea_ev = 1.0;
    double a_angstrom = 1000.0;
    double mu_e_angstrom = 1.0;
    double theta_deg = 0.0;
    int neighbor_cutoff = 1;
    std::string mode = "formula";
    std::string format = "csv";
    std::string output;
};

const CLI::Validator finite_number(
    [](std::string& s) -> std::string {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            return "not a number: " + s;
        if (!std::isfinite(v))
            return "must be finite: " + s;
        return {};
    },
    "FINITE", "finite_number");

void add_param_flags(CLI::App* sub, ParamFlags& flags, bool with_mode = true) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--ea-ev", flags.ea_ev, "Transition energy E_a in eV")
        ->check(finite_number)->capture_default_str();
    sub->add_option("--a-angstrom", flags.a_angstrom, "Lattice constant a in Angstrom")
        ->check(finite_number)->capture_default_str();
    sub->add_option("--mu-e-angstrom", flags.mu_e_angstrom, "Transition dipole mu in e*Angstrom")
        ->check(finite_number)->capture_default_str();
    sub->add_option("--theta-deg", flags.theta_deg, "Dipole angle to the lattice axis, degrees")
        ->check(finite_number)->capture_default_str();
    sub->add_option("--neighbor-cutoff", flags.neighbor_cutoff,
                    "Neighbor shells in the dispersion sum")->capture_default_str();
    if (with_mode)
        sub->add_option("--mode", flags.mode, "Rate evaluation mode")
            ->check(CLI::IsMember({"formula", "lightcone"}))->capture_default_str();
    sub->add_option("--format", flags.format, "Table output format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--output,-o", flags.output,
                    "Write to this file (tables) or directory (figures); default stdout");
    sub->add_option("--config", "Flat key=value file providing flag defaults")->expected(1);
}

int make_model(const ParamFlags& flags, ModelHandle& model) {
    exc_params params;
    exc_params_defaults(&params);
    params.ea_ev = flags.ea_ev;
    params.a_angstrom = flags.a_angstrom;
    params.mu_e_angstrom = flags.mu_e_angstrom;
    params.theta_rad = exc_deg_to_rad(flags.theta_deg);
    params.neighbor_cutoff = flags.neighbor_cutoff;
    const exc_status status = exc_model_create(&params, &model.ptr);
    if (status != EXC_OK)
        return fail("--ea-ev/--a-angstrom/--mu-e-angstrom/--theta-deg/--neighbor-cutoff", status);
    return exit_ok;
}

int emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "error (--output): cannot open for writing: " << output << "\n";
        return exit_usage;
    }
    out << text;
    return out ? exit_ok : exit_usage;
}

int mode_enum(const std::string& mode) {
    return mode == "lightcone" ? EXC_MODE_LIGHTCONE : EXC_MODE_FORMULA;
}

const char* regime_name(int regime) {
    switch (regime) {
        case EXC_REGIME_SUPERRADIANT: return "superradiant";
        case EXC_REGIME_SUBRADIANT: return "subradiant";
        case EXC_REGIME_DARK: return "dark";
    }
    return "unknown";
}

// --------------------------------------------------------------- config file

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot read config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    auto trim = [](std::string& s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
    };
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key=value, got: " + line);
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        trim(key);
        trim(value);
        values[key] = value;
    }
    return values;
}

// Rebuilds the argument list with config-provided flags injected right after
// the subcommand name; explicit flags come later and win (TakeLast). Keys
// that do not name a flag of the chosen subcommand are ignored, so one config
// can serve several subcommands.
std::vector<std::string> inject_config(const CLI::App& app,
                                       const std::vector<std::string>& args) {
    std::string config_path;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (a.rfind("--config=", 0) == 0)
            config_path = a.substr(9);
    }
    if (config_path.empty())
        return args;

    const auto values = load_config(config_path);
    std::vector<std::string> out;
    bool injected = false;
    for (const std::string& a : args) {
        out.push_back(a);
        if (injected || a.empty() || a[0] == '-')
            continue;
        const CLI::App* sub = nullptr;
        for (const CLI::App* candidate :
             app.get_subcommands([](const CLI::App*) { return true; }))
            if (candidate->get_name() == a)
                sub = candidate;
        if (!sub)
            continue;
        for (const auto& [key, value] : values) {
            if (key == "config")
                continue;
            const std::string flag = "--" + key;
            if (sub->get_option_no_throw(flag) != nullptr)
                out.push_back(flag + "=" + value);
        }
        injected = true;
    }
    return out;
}

// --------------------------------------------------------------- subcommands

struct GammaArgs {
    ParamFlags params;
    double ka = 0.0;
};

int run_gamma(const GammaArgs& args) {
    ModelHandle model;
    if (int rc = make_model(args.params, model))
        return rc;
    exc_decay_result result;
    const exc_status status =
        exc_gamma(model.ptr, args.ka, mode_enum(args.params.mode), &result);
    if (status != EXC_OK)
        return fail("--ka", status);
    std::ostringstream out;
    out << "gamma_per_s=" << sci9(result.gamma_per_s) << "\n"
        << "ratio=" << sci9(result.ratio) << "\n"
        << "regime=" << regime_name(result.regime) << "\n"
        << "bracket=" << sci9(result.bracket) << "\n"
        << "r=" << sci9(result.r) << "\n";
    return emit(out.str(), args.params.output);
}

struct DispersionArgs {
    ParamFlags params;
    double ka = 0.0;
    int n_sites = 0;
};

int run_dispersion(const DispersionArgs& args) {
    ModelHandle model;
    if (int rc = make_model(args.params, model))
        return rc;
    std::ostringstream out;
    if (args.n_sites > 0) {
        std::vector<double> grid(static_cast<size_t>(args.n_sites) + 1);
        size_t count = 0;
        exc_status status = exc_allowed_ka(args.n_sites, grid.data(), grid.size(), &count);
        if (status != EXC_OK)
            return fail("--n-sites", status);
        double lo = 0.0, hi = 0.0;
        status = exc_band_edges_ev(model.ptr, &lo, &hi);
        if (status != EXC_OK)
            return fail("dispersion", status);
        out << "# band_min_ev=" << sci9(lo) << "\n# band_max_ev=" << sci9(hi) << "\n";
        out << "ka,e_ex_ev\n";
        for (size_t i = 0; i < count; ++i) {
            double energy = 0.0;
            status = exc_dispersion_ev(model.ptr, grid[i], &energy);
            if (status != EXC_OK)
                return fail("--n-sites", status);
            out << sci9(grid[i]) << ',' << sci9(energy) << "\n";
        }
    } else {
        double energy = 0.0;
        const exc_status status = exc_dispersion_ev(model.ptr, args.ka, &energy);
        if (status != EXC_OK)
            return fail("--ka", status);
        out << "ka=" << sci9(args.ka) << "\n"
            << "e_ex_ev=" << sci9(energy) << "\n";
    }
    return emit(out.str(), args.params.output);
}

struct ScanArgs {
    ParamFlags params;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 500;
    bool include_atom_reference = false;
    double fixed_ka = 0.0;  // theta scans only
};

int run_scan(const ScanArgs& args, bool theta_axis) {
    ModelHandle model;
    if (int rc = make_model(args.params, model))
        return rc;
    exc_scan_spec spec;
    spec.axis = theta_axis ? EXC_AXIS_THETA : EXC_AXIS_KA;
    spec.fixed_value = theta_axis ? args.fixed_ka : exc_deg_to_rad(args.params.theta_deg);
    spec.lo = theta_axis ? exc_deg_to_rad(args.lo) : args.lo;
    spec.hi = theta_axis ? exc_deg_to_rad(args.hi) : args.hi;
    spec.steps = args.steps;
    spec.mode = mode_enum(args.params.mode);
    spec.include_atom_reference = args.include_atom_reference ? 1 : 0;

    TableHandle table;
    exc_status status = exc_scan(model.ptr, &spec, &table.ptr);
    if (status != EXC_OK)
        return fail(theta_axis ? "--lo-deg/--hi-deg/--steps/--ka" : "--lo/--hi/--steps/--theta-deg",
                    status);
    OwnedString text;
    status = args.params.format == "json" ? exc_scan_table_json(table.ptr, &text.ptr)
                                          : exc_scan_table_csv(table.ptr, &text.ptr);
    if (status != EXC_OK)
        return fail("scan", status);
    return emit(text.ptr, args.params.output);
}

int run_critical_k(const ParamFlags& params) {
    ModelHandle model;
    if (int rc = make_model(params, model))
        return rc;
    exc_critical_k result;
    const exc_status status = exc_critical_ka(model.ptr, &result);
    if (status != EXC_OK)
        return fail("--theta-deg", status);
    std::ostringstream out;
    if (result.present)
        out << "ka_c=" << sci9(result.ka_c) << "\n";
    else if (result.beyond_zone_edge)
        out << "none (critical point beyond zone edge)\n";
    else
        out << "none (theta beyond magic angle)\n";
    return emit(out.str(), params.output);
}

struct DarkWindowArgs {
    ParamFlags params;
    double ka = 0.0;
};

int run_dark_window(const DarkWindowArgs& args) {
    ModelHandle model;
    if (int rc = make_model(args.params, model))
        return rc;
    exc_dark_window_result result;
    const exc_status status = exc_dark_window(model.ptr, args.ka, &result);
    if (status != EXC_OK)
        return fail("--ka", status);
    std::ostringstream out;
    if (result.present) {
        const double star_deg = exc_rad_to_deg(result.theta_star_rad);
        out << "theta_star_deg=" << sci9(star_deg) << "\n"
            << "dark_below_deg=" << sci9(star_deg) << "\n"
            << "dark_above_deg=" << sci9(180.0 - star_deg) << "\n";
    } else {
        out << "none (rate positive at all angles)\n";
    }
    return emit(out.str(), args.params.output);
}

struct IntensityArgs {
    ParamFlags params;
    double ka = 0.01;
    double rho_angstrom = 1.0e7;
    double z_angstrom = 0.0;
    double t_start_s = 0.0;
    double t_end_s = 1.0e-7;
    int t_steps = 200;
    double population0 = 1.0;
    double amplitude0_re = 0.0;
    double amplitude0_im = 0.0;
    int n_sites = 1000;
};

int run_intensity(const IntensityArgs& args) {
    ModelHandle model;
    if (int rc = make_model(args.params, model))
        return rc;
    if (args.t_steps < 1) {
        std::cerr << "error (--t-steps): must be at least 1\n";
        return exit_usage;
    }
    if (!(args.t_end_s >= args.t_start_s)) {
        std::cerr << "error (--t-end): must not precede --t-start\n";
        return exit_usage;
    }
    exc_exciton_state state;
    state.amplitude0_re = args.amplitude0_re;
    state.amplitude0_im = args.amplitude0_im;
    state.population0 = args.population0;
    state.ka = args.ka;
    state.theta_rad = exc_deg_to_rad(args.params.theta_deg);
    state.n_sites = args.n_sites;

    std::vector<double> grid(args.t_steps);
    for (int i = 0; i < args.t_steps; ++i)
        grid[i] = args.t_steps == 1
                      ? args.t_start_s
                      : args.t_start_s + i * (args.t_end_s - args.t_start_s) / (args.t_steps - 1);

    unsigned warnings = 0;
    const exc_field_point first{args.rho_angstrom, args.z_angstrom, grid.front()};
    if (exc_farfield_warnings(model.ptr, &state, &first, &warnings) == EXC_OK) {
        if (warnings & EXC_WARN_KA_LARGE)
            std::cerr << "warning: |ka| > 0.1 lies outside the long-wavelength validity range\n";
        if (warnings & EXC_WARN_RHO_NEAR_FIELD)
            std::cerr << "warning: rho is within 10 wavelengths; far-field expressions are inaccurate\n";
    }

    OwnedString text;
    const exc_status status =
        args.params.format == "json"
            ? exc_intensity_trace_json(model.ptr, &state, args.rho_angstrom, args.z_angstrom,
                                       grid.data(), grid.size(), &text.ptr)
            : exc_intensity_trace_csv(model.ptr, &state, args.rho_angstrom, args.z_angstrom,
                                      grid.data(), grid.size(), &text.ptr);
    if (status != EXC_OK)
        return fail("--rho-angstrom/--t-start/--t-end", status);
    return emit(text.ptr, args.params.output);
}

int run_figures(const ParamFlags& params) {
    ModelHandle model;
    if (int rc = make_model(params, model))
        return rc;
    const std::string dir = params.output.empty() ? "." : params.output;
    const exc_status status = exc_figures_write(model.ptr, dir.c_str());
    if (status != EXC_OK)
        return fail("--output", status);
    std::cout << "wrote fig3a.csv fig3b.csv fig4.csv fig5a.csv fig5b.csv ka_pi.csv to "
              << dir << "\n";
    return exit_ok;
}

struct ValidateArgs {
    ParamFlags params;
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_subdivisions = 200;
};

int run_validate(const ValidateArgs& args) {
    ModelHandle model;
    if (int rc = make_model(args.params, model))
        return rc;
    const exc_quad_spec spec{args.rel_tol, args.abs_tol, args.max_subdivisions};
    exc_validation_summary summary;
    OwnedString json;
    const exc_status status = exc_validate_default(
        model.ptr, &spec, &summary, args.params.output.empty() ? nullptr : &json.ptr);
    if (status != EXC_OK)
        return fail("--rel-tol/--abs-tol/--max-subdivisions", status);
    if (!args.params.output.empty())
        if (int rc = emit(json.ptr, args.params.output))
            return rc;
    std::cout << (summary.pass ? "PASS" : "FAIL")
              << " max_rel_err=" << sci9(summary.max_rel_err) << "\n";
    return summary.pass ? exit_ok : exit_validation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exciton dispersion and radiative decay rates for a 1D atomic lattice"};
    app.require_subcommand(1);
    app.add_option("--config", "Flat key=value file providing flag defaults")->expected(1);

    GammaArgs gamma_args;
    auto* gamma = app.add_subcommand("gamma", "Damping rate of one exciton mode");
    add_param_flags(gamma, gamma_args.params);
    gamma->add_option("--ka", gamma_args.ka, "Dimensionless wave number in [-pi, pi]")
        ->check(finite_number)->capture_default_str();

    DispersionArgs dispersion_args;
    auto* dispersion = app.add_subcommand("dispersion", "Exciton band energy");
    add_param_flags(dispersion, dispersion_args.params, false);
    dispersion->add_option("--ka", dispersion_args.ka, "Evaluate at this wave number")
        ->check(finite_number)->capture_default_str();
    dispersion->add_option("--n-sites", dispersion_args.n_sites,
                           "Tabulate over the allowed wave numbers of an N-site ring (even N)");

    ScanArgs scan_ka_args;
    scan_ka_args.lo = 0.001;
    scan_ka_args.hi = exc_deg_to_rad(180.0);
    auto* scan_ka = app.add_subcommand("scan-ka", "Sweep the damping rate over ka at fixed theta");
    add_param_flags(scan_ka, scan_ka_args.params);
    scan_ka->add_option("--lo", scan_ka_args.lo, "Scan start (ka)")
        ->check(finite_number)->capture_default_str();
    scan_ka->add_option("--hi", scan_ka_args.hi, "Scan end (ka)")
        ->check(finite_number)->capture_default_str();
    scan_ka->add_option("--steps", scan_ka_args.steps, "Number of rows")->capture_default_str();
    scan_ka->add_flag("--include-atom-reference", scan_ka_args.include_atom_reference,
                      "Add the single-atom rate as a reference column");

    ScanArgs scan_theta_args;
    scan_theta_args.lo = 0.0;
    scan_theta_args.hi = 180.0;
    auto* scan_theta = app.add_subcommand("scan-theta", "Sweep the damping rate over theta at fixed ka");
    add_param_flags(scan_theta, scan_theta_args.params);
    scan_theta->add_option("--ka", scan_theta_args.fixed_ka, "Fixed wave number")
        ->check(finite_number)->capture_default_str();
    scan_theta->add_option("--lo-deg", scan_theta_args.lo, "Scan start (degrees)")
        ->check(finite_number)->capture_default_str();
    scan_theta->add_option("--hi-deg", scan_theta_args.hi, "Scan end (degrees)")
        ->check(finite_number)->capture_default_str();
    scan_theta->add_option("--steps", scan_theta_args.steps, "Number of rows")->capture_default_str();
    scan_theta->add_flag("--include-atom-reference", scan_theta_args.include_atom_reference,
                         "Add the single-atom rate as a reference column");

    ParamFlags critical_params;
    auto* critical = app.add_subcommand("critical-k", "Wave number where the rate reaches zero");
    add_param_flags(critical, critical_params, false);

    DarkWindowArgs dark_args;
    auto* dark = app.add_subcommand("dark-window", "Angular window of zero rate at fixed ka");
    add_param_flags(dark, dark_args.params, false);
    dark->add_option("--ka", dark_args.ka, "Fixed wave number in (0, pi]")
        ->check(finite_number)->capture_default_str();

    IntensityArgs intensity_args;
    auto* intensity =
        app.add_subcommand("intensity", "Emitted-intensity time series at an observation point");
    add_param_flags(intensity, intensity_args.params, false);
    intensity->add_option("--ka", intensity_args.ka, "Exciton wave number")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--rho-angstrom", intensity_args.rho_angstrom, "Transverse distance")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--z-angstrom", intensity_args.z_angstrom, "Axial coordinate")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--t-start", intensity_args.t_start_s, "First sample time, s")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--t-end", intensity_args.t_end_s, "Last sample time, s")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--t-steps", intensity_args.t_steps, "Number of samples")
        ->capture_default_str();
    intensity->add_option("--population0", intensity_args.population0, "Initial mode population")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--amplitude0-re", intensity_args.amplitude0_re,
                          "Initial amplitude, real part")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--amplitude0-im", intensity_args.amplitude0_im,
                          "Initial amplitude, imaginary part")
        ->check(finite_number)->capture_default_str();
    intensity->add_option("--n-sites", intensity_args.n_sites, "Number of lattice sites")
        ->capture_default_str();

    ParamFlags figures_params;
    auto* figures = app.add_subcommand("figures", "Write the six standard sweep tables as CSV");
    add_param_flags(figures, figures_params);

    ValidateArgs validate_args;
    auto* validate =
        app.add_subcommand("validate", "Cross-check the closed-form rate against quadrature");
    add_param_flags(validate, validate_args.params, false);
    validate->add_option("--rel-tol", validate_args.rel_tol, "Quadrature relative tolerance")
        ->check(finite_number)->capture_default_str();
    validate->add_option("--abs-tol", validate_args.abs_tol, "Quadrature absolute tolerance")
        ->check(finite_number)->capture_default_str();
    validate->add_option("--max-subdivisions", validate_args.max_subdivisions,
                         "Quadrature panel budget")->capture_default_str();

    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const auto expanded = inject_config(app, args);
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (gamma->parsed()) return run_gamma(gamma_args);
    if (dispersion->parsed()) return run_dispersion(dispersion_args);
    if (scan_ka->parsed()) return run_scan(scan_ka_args, false);
    if (scan_theta->parsed()) return run_scan(scan_theta_args, true);
    if (critical->parsed()) return run_critical_k(critical_params);
    if (dark->parsed()) return run_dark_window(dark_args);
    if (intensity->parsed()) return run_intensity(intensity_args);
    if (figures->parsed()) return run_figures(figures_params);
    if (validate->parsed()) return run_validate(validate_args);
    return exit_usage;
}
