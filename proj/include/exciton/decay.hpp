#pragma once

#include <optional>
#include <string>

#include "exciton/lattice.hpp"

namespace exciton {

/// How rates are evaluated outside the light cone (hbar*c*k > E_ex, where no
/// emitted photon can carry the exciton's parallel wave vector and energy
/// simultaneously):
///   formula   - evaluate the closed-form rate everywhere, clamping negative
///               angular factors to zero,
///   lightcone - additionally force the rate to zero for r > 1, where the
///               golden-rule energy delta has empty support.
/// Both agree exactly for r <= 1.
enum class EvalMode { formula, lightcone };

enum class Regime { superradiant, subradiant, dark };

std::string to_string(EvalMode mode);
std::string to_string(Regime regime);
EvalMode eval_mode_from_string(const std::string& s);
Regime regime_from_string(const std::string& s);

struct DecayResult {
    double gamma_per_s;       // collective radiative damping rate, clamped >= 0
    double gamma_atom_per_s;  // free-atom reference rate
    double ratio;             // gamma / gamma_atom (0 when gamma_atom = 0)
    Regime regime;            // dark iff gamma == 0; superradiant iff ratio > 1
    EvalMode mode;
    double bracket;           // angular factor before clamping
    double r;                 // hbar*c*k / E_ex; r > 1 lies outside the light cone
};

/// Outcome of the critical-wave-number search at fixed theta.
struct CriticalK {
    std::optional<double> ka_c;   // zero of the angular factor on (0, pi]
    bool beyond_zone_edge = false; // factor stays positive up to ka = pi
    double theta_rad = 0.0;
};

/// Angular dark window at fixed ka: the rate vanishes for theta in
/// [0, theta_star) and (pi - theta_star, pi].
struct DarkWindow {
    double theta_star_rad;
};

/// Free-atom spontaneous-emission rate mu^2 E_a^3 / (3 pi eps0 hbar^4 c^3), in 1/s.
double gamma_atom_per_s(const LatticeParams& params);

/// Radiative damping rate of the exciton mode `ka`.
/// gamma = prefactor * max(bracket, 0) with
///   bracket  = 1 + cos^2(theta) - r^2 (2 cos^2(theta) - sin^2(theta)),
///   prefactor = mu^2 E_ex^2 / (4 eps0 a hbar^3 c^2).
/// Even in ka and under theta -> pi - theta.
DecayResult gamma_exciton(const LatticeParams& params, double ka,
                          EvalMode mode = EvalMode::formula);

/// Unclamped angular factor and r at (params.theta, ka); shared by the rate
/// evaluation and the solvers below.
struct BracketEval {
    double bracket;
    double r;
    double energy_ev;
};
BracketEval decay_bracket(const LatticeParams& params, double ka);

/// Smallest ka in (0, pi] where the angular factor reaches zero; the rate
/// vanishes beyond it. No solution exists at or beyond the magic angle
/// (2 cos^2 - sin^2 <= 0); near the magic angle the zero can fall outside
/// the zone, reported via beyond_zone_edge. Bisection to 1e-10 in ka.
CriticalK critical_ka(const LatticeParams& params);

/// Boundary angle theta_star of the dark window at fixed ka in (0, pi],
/// or nullopt when the rate is positive at every angle (r <= 1).
/// Bisection to 1e-10 rad.
std::optional<DarkWindow> dark_window(const LatticeParams& params, double ka);

} // namespace exciton
