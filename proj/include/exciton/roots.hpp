#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace exciton {

/// Bisection root finder. Requires f(lo)*f(hi) <= 0; returns std::nullopt
/// when the endpoints do not bracket a sign change. Iterates until the
/// interval width drops below `x_tol` or `max_iter` halvings, whichever
/// comes first.
template <typename F>
std::optional<double> bisect(F&& f, double lo, double hi, double x_tol, int max_iter = 200) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi)) return std::nullopt;
    for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Golden-section minimizer on [lo, hi] for a unimodal function.
/// Returns the abscissa of the minimum to within `x_tol`.
template <typename F>
double golden_min(F&& f, double lo, double hi, double x_tol, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace exciton
