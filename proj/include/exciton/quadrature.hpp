#pragma once

#include <functional>
#include <stdexcept>

namespace exciton {

/// Tolerances for the adaptive quadrature. Convergence requires the summed
/// panel error estimate to drop below max(abs_tol, rel_tol * |integral|).
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_subdivisions = 200;

    void validate() const;  // rel_tol > 0, max_subdivisions >= 1
};

/// Raised when the panel refinement stalls; carries the achieved estimate.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& msg, double estimate, int used)
        : std::runtime_error(msg), error_estimate(estimate), subdivisions(used) {}
    double error_estimate;
    int subdivisions;
};

/// Integral of f over [a, b] by adaptive Gauss-Kronrod (G7, K15) panels:
/// the panel with the largest error estimate is bisected until the total
/// estimate meets the tolerance or the subdivision budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

} // namespace exciton
