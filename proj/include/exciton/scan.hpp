#pragma once

#include <map>
#include <string>
#include <vector>

#include "exciton/decay.hpp"
#include "exciton/lattice.hpp"

namespace exciton {

enum class ScanAxis { ka, theta };

std::string to_string(ScanAxis axis);
ScanAxis scan_axis_from_string(const std::string& s);

/// A parameter sweep of the damping rate along one axis; the other
/// coordinate is held at fixed_value (theta_rad for ka scans, ka for theta
/// scans, overriding params.theta_rad for the swept evaluation).
struct ScanSpec {
    ScanAxis axis = ScanAxis::ka;
    double fixed_value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 500;
    EvalMode mode = EvalMode::formula;
    bool include_atom_reference = false;

    void validate() const;
};

struct ScanRow {
    double swept_value;
    double gamma_per_s;
    double ratio;
    Regime regime;
};

/// Tabulated sweep plus everything needed to regenerate it. Serialization
/// keeps params/spec at full precision so a parsed table reproduces the
/// original doubles exactly.
struct ScanTable {
    LatticeParams params;
    ScanSpec spec;
    std::string version;
    double gamma_atom_per_s = 0.0;  // populated when include_atom_reference
    std::vector<ScanRow> rows;

    std::string to_csv() const;
    std::string to_json() const;
    static ScanTable from_csv(const std::string& text);
    static ScanTable from_json(const std::string& text);
};

/// Uniform-grid evaluation of gamma_exciton along the spec axis. Rows are
/// plain pointwise rate calls; the scan adds no numerical transformation.
ScanTable scan(const LatticeParams& params, const ScanSpec& spec);

/// The six standard sweeps at the default figure coordinates, 500 steps
/// each, formula mode, with the single-atom reference:
///   fig3a (theta=0, ka in [0.001, pi])    fig3b (theta=90 deg, same range)
///   fig4  (ka=0.01, theta in [0, pi])     fig5a (ka=0.5)
///   fig5b (ka=1)                          ka_pi (ka=pi)
std::map<std::string, ScanTable> figure_bundle(const LatticeParams& params);

} // namespace exciton
