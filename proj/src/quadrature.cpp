#include "exciton/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace exciton {

namespace {

// Gauss-Kronrod (G7, K15) abscissae and weights on [-1, 1].
constexpr double k15_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double k15_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss weights attach to the odd-index Kronrod nodes.
constexpr double g7_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double integral;
    double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double offset = half * k15_nodes[i];
        const double value = (i == 7) ? f(center)
                                      : f(center - offset) + f(center + offset);
        kronrod += k15_weights[i] * value;
        if (i % 2 == 1)
            gauss += g7_weights[i / 2] * value;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
        throw std::invalid_argument("rel_tol must be positive and finite");
    if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol))
        throw std::invalid_argument("abs_tol must be non-negative and finite");
    if (max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be at least 1");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    spec.validate();
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::invalid_argument("integration bounds must be finite");
    if (a == b)
        return 0.0;
    if (b < a)
        return -integrate(f, b, a, spec);

    std::vector<Panel> panels{evaluate_panel(f, a, b)};
    int subdivisions = 0;
    for (;;) {
        double total = 0.0, error = 0.0;
        for (const Panel& p : panels) {
            total += p.integral;
            error += p.error;
        }
        if (error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)))
            return total;
        if (subdivisions >= spec.max_subdivisions)
            throw QuadratureError(
                "quadrature did not converge: error estimate " + std::to_string(error)
                    + " after " + std::to_string(subdivisions) + " subdivisions",
                error, subdivisions);

        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& x, const Panel& y) { return x.error < y.error; });
        const double lo = worst->a, hi = worst->b;
        const double mid = 0.5 * (lo + hi);
        *worst = evaluate_panel(f, lo, mid);
        panels.push_back(evaluate_panel(f, mid, hi));
        ++subdivisions;
    }
}

} // namespace exciton
