#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Reference integrator used to check every inequality in this library.
/// Deliberately independent of the certified quadrature module: plain
/// adaptive Simpson with Richardson extrapolation, no shared code, so the
/// two cannot fail in the same way.
namespace ostrowski::oracle {

struct result {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
};

struct depth_exceeded : std::runtime_error {
    explicit depth_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double default_tol = 1e-10;
inline constexpr int max_depth = 60;

namespace detail {

template <class F>
double adapt(const F& g, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth, double& est, long& evals) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double err = (refined - whole) / 15.0;
    // NaN from a singular integrand fails this test and recurses to the
    // depth limit, which is the failure mode we want surfaced.
    if (std::abs(err) <= tol) {
        est += std::abs(err);
        return refined + err;
    }
    if (depth <= 0)
        throw depth_exceeded("oracle: refinement depth exhausted near [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
    return adapt(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, est, evals) +
           adapt(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, est, evals);
}

} // namespace detail

/// Integrate g over [a, b] to roughly tol absolute accuracy. est_error
/// accumulates the extrapolated panel errors and is itself an estimate,
/// not a rigorous bound.
template <class F>
result integrate(F&& g, double a, double b, double tol = default_tol) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b)
        throw std::invalid_argument("oracle::integrate: need finite a <= b");
    if (!(tol > 0.0))
        throw std::invalid_argument("oracle::integrate: tol must be > 0");
    if (a == b) return {};

    result r;
    const double fa = g(a);
    const double m = 0.5 * (a + b);
    const double fm = g(m);
    const double fb = g(b);
    r.evaluations = 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    r.value = detail::adapt(g, a, b, fa, fm, fb, whole, tol, max_depth,
                            r.est_error, r.evaluations);
    return r;
}

/// Integrate g over [a, b], forcing panel boundaries at the given interior
/// points first. Adaptive Simpson trusts its sample lattice: an integrand
/// that is zero at every sample of a panel is accepted as zero, so a feature
/// supported strictly between samples is silently lost. Callers that know
/// structural points (kinks, support edges of a compactly supported factor)
/// must pass them here. Points outside (a, b) are ignored.
template <class G>
result integrate_split(G&& g, double a, double b, std::vector<double> points,
                       double tol = default_tol) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b)
        throw std::invalid_argument("oracle::integrate_split: need finite a <= b");
    std::vector<double> cuts{a, b};
    for (double p : points)
        if (p > a && p < b) cuts.push_back(p);
    std::sort(cuts.begin(), cuts.end());
    result total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] == cuts[i]) continue;
        const result piece = integrate(g, cuts[i], cuts[i + 1], tol);
        total.value += piece.value;
        total.est_error += piece.est_error;
        total.evaluations += piece.evaluations;
    }
    return total;
}

/// Integrate g(t) w(t) over [a, b].
template <class F, class W>
result integrate_weighted(F&& g, W&& w, double a, double b, double tol = default_tol) {
    return integrate([&](double t) { return g(t) * w(t); }, a, b, tol);
}

/// Integrate g(t) |x - t| over [a, b], splitting at the kink t = x so each
/// piece is smooth and Simpson converges at full order.
template <class G>
result integrate_kinked(G&& g, double a, double b, double x, double tol = default_tol) {
    if (x <= a) return integrate([&](double t) { return g(t) * (t - x); }, a, b, tol);
    if (x >= b) return integrate([&](double t) { return g(t) * (x - t); }, a, b, tol);
    const result left = integrate([&](double t) { return g(t) * (x - t); }, a, x, tol);
    const result right = integrate([&](double t) { return g(t) * (t - x); }, x, b, tol);
    return {left.value + right.value, left.est_error + right.est_error,
            left.evaluations + right.evaluations};
}

} // namespace ostrowski::oracle
