#pragma once

#include "function_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ostrowski {

/// Mean value point for Pompeiu's theorem: on an interval [x1, x2] not
/// containing 0 there is xi in (x1, x2) with
///
///     (x1 f(x2) - x2 f(x1)) / (x1 - x2) = f(xi) - xi f'(xi).
///
/// Geometrically both sides are y-intercepts: the left of the secant through
/// (x1, f(x1)), (x2, f(x2)), the right of the tangent at xi.
struct pompeiu_point {
    double xi = 0.0;
    double residual = 0.0; ///< deviation(xi) - quotient at the returned xi
    double quotient = 0.0;
};

struct no_root_located : std::runtime_error {
    explicit no_root_located(const std::string& what) : std::runtime_error(what) {}
};

/// (x1 f(x2) - x2 f(x1)) / (x1 - x2), the y-intercept of the secant.
inline double pompeiu_quotient(const function_model& f, double x1, double x2) {
    if (x1 == x2)
        throw std::invalid_argument("pompeiu_quotient: x1 and x2 must differ");
    return (x1 * f(x2) - x2 * f(x1)) / (x1 - x2);
}

/// Locate a Pompeiu point in (x1, x2). Scans an interior grid for a sign
/// change of g(t) = deviation(t) - quotient and bisects it; a residual that
/// never exceeds tol on the grid (affine f) yields the midpoint. Throws
/// no_root_located when the model's derivative is inconsistent with its
/// values and no near-root exists.
inline pompeiu_point find_pompeiu_point(const function_model& f, double x1, double x2,
                                        double tol = 1e-10) {
    if (!(x1 < x2))
        throw std::invalid_argument("find_pompeiu_point: need x1 < x2");
    interval iv(x1, x2); // validates that [x1, x2] avoids 0

    const double q = pompeiu_quotient(f, x1, x2);
    auto g = [&](double t) { return f.deviation(t) - q; };

    constexpr int grid_n = 1024;
    const double span = x2 - x1;
    std::vector<double> ts(grid_n), gs(grid_n);
    bool all_small = true;
    double best_abs = std::numeric_limits<double>::infinity();
    double best_t = x1;
    for (int k = 0; k < grid_n; ++k) {
        ts[k] = x1 + (k + 1) * span / (grid_n + 1);
        gs[k] = g(ts[k]);
        const double a = std::abs(gs[k]);
        if (a > tol) all_small = false;
        if (a < best_abs) {
            best_abs = a;
            best_t = ts[k];
        }
    }

    if (all_small) {
        const double mid = x1 + 0.5 * span;
        return {mid, g(mid), q};
    }

    for (int k = 0; k < grid_n; ++k)
        if (gs[k] == 0.0) return {ts[k], 0.0, q};

    for (int k = 0; k + 1 < grid_n; ++k) {
        if (std::signbit(gs[k]) == std::signbit(gs[k + 1])) continue;
        double lo = ts[k], hi = ts[k + 1], glo = gs[k];
        const double width_tol = 1e-13 * span;
        while (hi - lo > width_tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            const double gm = g(mid);
            if (gm == 0.0) return {mid, 0.0, q};
            if (std::signbit(gm) == std::signbit(glo)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        const double xi = 0.5 * (lo + hi);
        return {xi, g(xi), q};
    }

    // No sign change: accept a grid point whose residual is within tol,
    // otherwise the model contradicts the theorem's hypotheses.
    if (best_abs <= tol) return {best_t, g(best_t), q};
    throw no_root_located("find_pompeiu_point: no point with f(t) - t f'(t) near the secant "
                          "quotient; model derivative may be inconsistent");
}

/// The two y-intercepts the theorem equates: secant through x1, x2 and
/// tangent at xi. Equal (up to the residual of xi) by Pompeiu's theorem.
struct y_intercept_pair {
    double secant = 0.0;
    double tangent = 0.0;
};

inline y_intercept_pair y_intercepts(const function_model& f, double x1, double x2, double xi) {
    return {pompeiu_quotient(f, x1, x2), f.deviation(xi)};
}

} // namespace ostrowski
