#pragma once

#include <utility>
#include <vector>

namespace exciton {

/// Physical inputs for an infinite 1D chain of two-level atoms.
///
/// All operations are pure functions of these immutable inputs; instances
/// can be shared freely across threads.
struct LatticeParams {
    double transition_energy_ev = 1.0;       // E_a
    double lattice_constant_angstrom = 1000.0;
    double dipole_e_angstrom = 1.0;           // transition dipole magnitude, e*Angstrom
    double theta_rad = 0.0;                   // dipole angle to the lattice axis, in [0, pi]
    int neighbor_cutoff = 1;                  // neighbor shells kept in the dispersion sum

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;

    /// theta folded into [0, pi/2]. Quantities even under theta -> pi - theta
    /// evaluate trig at the folded angle so mirrored inputs take the exact
    /// same arithmetic path.
    double theta_folded() const;
};

/// One point of the exciton band.
struct ExcitonMode {
    double ka;          // dimensionless wave number, in [-pi, pi]
    double energy_ev;   // E_ex(ka, theta)
    double theta_rad;
};

/// Quasi-static dipole-dipole coupling energy (hbar*J) between two atoms
/// separated by `separation_angstrom`, in eV. Negative below the magic
/// angle arccos(1/sqrt(3)), zero at it, positive above.
double dipole_coupling_ev(const LatticeParams& params, double separation_angstrom);

/// Tight-binding exciton dispersion E_ex = E_a + 2 sum_n hbar*J(n a) cos(n ka),
/// summed over the first `neighbor_cutoff` shells. Even in ka.
/// Throws std::domain_error for |ka| > pi (fold into the first zone first).
ExcitonMode dispersion(const LatticeParams& params, double ka);

/// (E_min, E_max) of the band over ka in [-pi, pi]. With neighbor_cutoff = 1
/// the width is 4|hbar*J(theta)|.
std::pair<double, double> band_edges_ev(const LatticeParams& params);

/// The n_sites+1 allowed wave numbers ka = 2*pi*p/N, p = 0, +-1, ..., +-N/2,
/// sorted ascending with the zone-edge points at exactly +-pi.
/// Requires an even n_sites >= 2; odd counts are rejected because the grid
/// includes the +-N/2 endpoints.
std::vector<double> allowed_ka(int n_sites);

/// arccos(1/sqrt(3)) ~ 54.7356 deg: the angle where 1 - 3 cos^2(theta) = 0.
double magic_angle_rad();

} // namespace exciton
