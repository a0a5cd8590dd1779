#include "exciton/scan.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "exciton/constants.hpp"
#include "exciton/format.hpp"
#include "exciton/version.hpp"

namespace exciton {

namespace {

using nlohmann::ordered_json;

double swept_value_at(const ScanSpec& spec, int index) {
    // Upper half generated from hi so the grid is mirror-symmetric about the
    // range midpoint and never leaves [lo, hi] through rounding.
    const double step = (spec.hi - spec.lo) / (spec.steps - 1);
    const int from_end = spec.steps - 1 - index;
    if (from_end < index)
        return spec.hi - from_end * step;
    return spec.lo + index * step;
}

LatticeParams row_params(const LatticeParams& base, const ScanSpec& spec, double swept) {
    LatticeParams p = base;
    p.theta_rad = spec.axis == ScanAxis::ka ? spec.fixed_value : swept;
    return p;
}

double row_ka(const ScanSpec& spec, double swept) {
    return spec.axis == ScanAxis::ka ? swept : spec.fixed_value;
}

std::string bool_str(bool v) { return v ? "1" : "0"; }

double parse_double(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument("could not parse " + what + ": " + s);
    return v;
}

} // namespace

std::string to_string(ScanAxis axis) {
    return axis == ScanAxis::ka ? "ka" : "theta";
}

ScanAxis scan_axis_from_string(const std::string& s) {
    if (s == "ka") return ScanAxis::ka;
    if (s == "theta") return ScanAxis::theta;
    throw std::invalid_argument("unknown scan axis: " + s);
}

void ScanSpec::validate() const {
    if (!(lo < hi))
        throw std::invalid_argument("scan range must satisfy lo < hi");
    if (steps < 2)
        throw std::invalid_argument("scan needs at least 2 steps");
    if (axis == ScanAxis::ka) {
        if (!(lo >= -constants::pi && hi <= constants::pi))
            throw std::invalid_argument("ka range must lie within [-pi, pi]");
        if (!(fixed_value >= 0.0 && fixed_value <= constants::pi))
            throw std::invalid_argument("fixed theta must lie in [0, pi]");
    } else {
        if (!(lo >= 0.0 && hi <= constants::pi))
            throw std::invalid_argument("theta range must lie within [0, pi] radians");
        if (!(std::fabs(fixed_value) <= constants::pi))
            throw std::invalid_argument("fixed ka must lie in [-pi, pi]");
    }
}

ScanTable scan(const LatticeParams& params, const ScanSpec& spec) {
    params.validate();
    spec.validate();

    ScanTable table;
    table.params = params;
    table.spec = spec;
    table.version = exciton::version;
    if (spec.include_atom_reference)
        table.gamma_atom_per_s = gamma_atom_per_s(params);

    table.rows.reserve(spec.steps);
    for (int i = 0; i < spec.steps; ++i) {
        const double swept = swept_value_at(spec, i);
        try {
            const DecayResult d =
                gamma_exciton(row_params(params, spec, swept), row_ka(spec, swept), spec.mode);
            table.rows.push_back({swept, d.gamma_per_s, d.ratio, d.regime});
        } catch (const std::domain_error& e) {
            throw std::domain_error("row " + std::to_string(i) + " ("
                                    + to_string(spec.axis) + "=" + roundtrip(swept)
                                    + "): " + e.what());
        }
    }
    return table;
}

std::map<std::string, ScanTable> figure_bundle(const LatticeParams& params) {
    auto ka_scan = [](double theta) {
        ScanSpec s;
        s.axis = ScanAxis::ka;
        s.fixed_value = theta;
        s.lo = 0.001;
        s.hi = constants::pi;
        s.steps = 500;
        s.include_atom_reference = true;
        return s;
    };
    auto theta_scan = [](double ka) {
        ScanSpec s;
        s.axis = ScanAxis::theta;
        s.fixed_value = ka;
        s.lo = 0.0;
        s.hi = constants::pi;
        s.steps = 500;
        s.include_atom_reference = true;
        return s;
    };

    std::map<std::string, ScanTable> bundle;
    bundle.emplace("fig3a", scan(params, ka_scan(0.0)));
    bundle.emplace("fig3b", scan(params, ka_scan(0.5 * constants::pi)));
    bundle.emplace("fig4", scan(params, theta_scan(0.01)));
    bundle.emplace("fig5a", scan(params, theta_scan(0.5)));
    bundle.emplace("fig5b", scan(params, theta_scan(1.0)));
    bundle.emplace("ka_pi", scan(params, theta_scan(constants::pi)));
    return bundle;
}

std::string ScanTable::to_csv() const {
    std::ostringstream out;
    out << "# schema=scan/1\n";
    out << "# version=" << version << '\n';
    out << "# ea_ev=" << roundtrip(params.transition_energy_ev) << '\n';
    out << "# a_angstrom=" << roundtrip(params.lattice_constant_angstrom) << '\n';
    out << "# mu_e_angstrom=" << roundtrip(params.dipole_e_angstrom) << '\n';
    out << "# theta_rad=" << roundtrip(params.theta_rad) << '\n';
    out << "# neighbor_cutoff=" << params.neighbor_cutoff << '\n';
    out << "# axis=" << to_string(spec.axis) << '\n';
    out << "# fixed_value=" << roundtrip(spec.fixed_value) << '\n';
    out << "# lo=" << roundtrip(spec.lo) << '\n';
    out << "# hi=" << roundtrip(spec.hi) << '\n';
    out << "# steps=" << spec.steps << '\n';
    out << "# mode=" << to_string(spec.mode) << '\n';
    out << "# include_atom_reference=" << bool_str(spec.include_atom_reference) << '\n';
    if (spec.include_atom_reference)
        out << "# gamma_atom_per_s=" << roundtrip(gamma_atom_per_s) << '\n';

    out << "swept_axis,swept_value,gamma_per_s,gamma_ratio,regime";
    if (spec.include_atom_reference)
        out << ",gamma_atom_per_s";
    out << '\n';

    const std::string axis = to_string(spec.axis);
    for (const ScanRow& row : rows) {
        out << axis << ',' << sci9(row.swept_value) << ',' << sci9(row.gamma_per_s)
            << ',' << sci9(row.ratio) << ',' << to_string(row.regime);
        if (spec.include_atom_reference)
            out << ',' << sci9(gamma_atom_per_s);
        out << '\n';
    }
    return out.str();
}

std::string ScanTable::to_json() const {
    ordered_json j;
    j["schema"] = "scan/1";
    j["version"] = version;
    j["params"] = {{"ea_ev", params.transition_energy_ev},
                   {"a_angstrom", params.lattice_constant_angstrom},
                   {"mu_e_angstrom", params.dipole_e_angstrom},
                   {"theta_rad", params.theta_rad},
                   {"neighbor_cutoff", params.neighbor_cutoff}};
    j["spec"] = {{"axis", to_string(spec.axis)},
                 {"fixed_value", spec.fixed_value},
                 {"lo", spec.lo},
                 {"hi", spec.hi},
                 {"steps", spec.steps},
                 {"mode", to_string(spec.mode)},
                 {"include_atom_reference", spec.include_atom_reference}};
    if (spec.include_atom_reference)
        j["gamma_atom_per_s"] = gamma_atom_per_s;
    j["rows"] = ordered_json::array();
    for (const ScanRow& row : rows)
        j["rows"].push_back({{"swept_value", row.swept_value},
                             {"gamma_per_s", row.gamma_per_s},
                             {"gamma_ratio", row.ratio},
                             {"regime", to_string(row.regime)}});
    return j.dump(2);
}

ScanTable ScanTable::from_csv(const std::string& text) {
    ScanTable table;
    std::map<std::string, std::string> meta;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("malformed metadata line: " + line);
            std::string key = line.substr(1, eq - 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            meta[key] = line.substr(eq + 1);
            continue;
        }
        if (!header_seen) {
            header_seen = true;  // column header
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ','))
            fields.push_back(field);
        if (fields.size() < 5)
            throw std::invalid_argument("malformed row: " + line);
        table.rows.push_back({parse_double(fields[1], "swept_value"),
                              parse_double(fields[2], "gamma_per_s"),
                              parse_double(fields[3], "gamma_ratio"),
                              regime_from_string(fields[4])});
    }

    auto need = [&](const std::string& key) -> const std::string& {
        auto it = meta.find(key);
        if (it == meta.end())
            throw std::invalid_argument("missing metadata key: " + key);
        return it->second;
    };
    if (need("schema") != "scan/1")
        throw std::invalid_argument("unsupported schema: " + need("schema"));
    table.version = need("version");
    table.params.transition_energy_ev = parse_double(need("ea_ev"), "ea_ev");
    table.params.lattice_constant_angstrom = parse_double(need("a_angstrom"), "a_angstrom");
    table.params.dipole_e_angstrom = parse_double(need("mu_e_angstrom"), "mu_e_angstrom");
    table.params.theta_rad = parse_double(need("theta_rad"), "theta_rad");
    table.params.neighbor_cutoff = std::stoi(need("neighbor_cutoff"));
    table.spec.axis = scan_axis_from_string(need("axis"));
    table.spec.fixed_value = parse_double(need("fixed_value"), "fixed_value");
    table.spec.lo = parse_double(need("lo"), "lo");
    table.spec.hi = parse_double(need("hi"), "hi");
    table.spec.steps = std::stoi(need("steps"));
    table.spec.mode = eval_mode_from_string(need("mode"));
    table.spec.include_atom_reference = need("include_atom_reference") == "1";
    if (table.spec.include_atom_reference)
        table.gamma_atom_per_s = parse_double(need("gamma_atom_per_s"), "gamma_atom_per_s");
    return table;
}

ScanTable ScanTable::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "scan/1")
        throw std::invalid_argument("unsupported schema");

    ScanTable table;
    table.version = j.at("version").get<std::string>();
    const auto& p = j.at("params");
    table.params.transition_energy_ev = p.at("ea_ev").get<double>();
    table.params.lattice_constant_angstrom = p.at("a_angstrom").get<double>();
    table.params.dipole_e_angstrom = p.at("mu_e_angstrom").get<double>();
    table.params.theta_rad = p.at("theta_rad").get<double>();
    table.params.neighbor_cutoff = p.at("neighbor_cutoff").get<int>();
    const auto& s = j.at("spec");
    table.spec.axis = scan_axis_from_string(s.at("axis").get<std::string>());
    table.spec.fixed_value = s.at("fixed_value").get<double>();
    table.spec.lo = s.at("lo").get<double>();
    table.spec.hi = s.at("hi").get<double>();
    table.spec.steps = s.at("steps").get<int>();
    table.spec.mode = eval_mode_from_string(s.at("mode").get<std::string>());
    table.spec.include_atom_reference = s.at("include_atom_reference").get<bool>();
    if (table.spec.include_atom_reference)
        table.gamma_atom_per_s = j.at("gamma_atom_per_s").get<double>();
    for (const auto& row : j.at("rows"))
        table.rows.push_back({row.at("swept_value").get<double>(),
                              row.at("gamma_per_s").get<double>(),
                              row.at("gamma_ratio").get<double>(),
                              regime_from_string(row.at("regime").get<std::string>())});
    return table;
}

} // namespace exciton
