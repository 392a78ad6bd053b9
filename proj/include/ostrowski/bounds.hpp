#pragma once

#include "function_model.hpp"
#include "means.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ostrowski {

/// One evaluated inequality: both sides, the slack rhs - lhs, and whether
/// every ingredient of rhs was computed rigorously. Negative slack beyond
/// the verification margin means the inequality is violated and is reported
/// as-is, never clamped.
struct bound_report {
    std::string equation_id;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> x;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool rigorous = true;
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// Margin absorbing the reference integrator tolerance: lhs carries an
/// oracle value accurate to ~1e-10, so slack is trusted only beyond this.
inline double verification_margin(const bound_report& r) {
    return 1e-9 * std::max(1.0, std::abs(r.rhs));
}

inline bool holds(const bound_report& r) {
    return r.slack >= -verification_margin(r);
}

/// Weight function w >= 0 on the working interval. eval is trusted to be
/// nonnegative; evaluators spot-check it on a grid and throw domain_error
/// on a negative sample. breakpoints lists structural points of w (support
/// edges of a compactly supported weight, kinks): every oracle integral of
/// w is split there, otherwise a weight living strictly between the sample
/// lattice of one panel integrates to a silent zero.
struct weight_model {
    std::function<double(double)> eval;
    std::string description;
    std::vector<double> breakpoints;

    double operator()(double t) const { return eval(t); }
};

struct zero_weight : std::runtime_error {
    explicit zero_weight(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void check_weight(const weight_model& w, const interval& iv) {
    constexpr int n = 1024;
    for (int k = 0; k <= n; ++k) {
        const double t = k == n ? iv.b() : iv.a() + k * iv.width() / n;
        if (w(t) < 0.0)
            throw std::domain_error("weight '" + w.description + "' is negative at t = " +
                                    std::to_string(t));
    }
}

inline bound_report make_report(std::string id, double a, double b, std::optional<double> x,
                                double lhs, double rhs, bool rigorous) {
    bound_report r;
    r.equation_id = std::move(id);
    r.a = a;
    r.b = b;
    r.x = x;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.rigorous = rigorous;
    return r;
}

inline double mean_value(const function_model& f, const interval& iv, double tol) {
    const auto r = oracle::integrate([&](double t) { return f(t); }, iv.a(), iv.b(), tol);
    return r.value / iv.width();
}

inline void require_contained(const interval& iv, double x, const char* who) {
    if (!iv.contains(x))
        throw std::invalid_argument(std::string(who) + ": x must lie in [a, b]");
}

// Every integral against a weight goes through here so the weight's
// structural points always become panel boundaries.
template <class G>
double weight_integral(const G& g, const weight_model& w, double lo, double hi, double tol) {
    return oracle::integrate_split(g, lo, hi, w.breakpoints, tol).value;
}

} // namespace detail

/// Classical Ostrowski inequality,
///   |f(x) - mean(f)| <= [1/4 + ((x - A)/(b-a))^2] (b-a) M,
/// with M an upper bound for |f'| on [a, b] supplied by the caller. Included
/// as the baseline the Pompeiu-type bound is compared against.
inline bound_report classic_bound(const function_model& f, const interval& iv, double x,
                                  double sup_derivative, double tol = oracle::default_tol) {
    detail::require_contained(iv, x, "classic_bound");
    if (!(sup_derivative >= 0.0))
        throw std::invalid_argument("classic_bound: sup_derivative must be >= 0");
    const double mean = detail::mean_value(f, iv, tol);
    const double lhs = std::abs(f(x) - mean);
    const double u = (x - iv.midpoint()) / iv.width();
    const double rhs = (0.25 + u * u) * iv.width() * sup_derivative;
    auto r = detail::make_report("1.1", iv.a(), iv.b(), x, lhs, rhs, true);
    r.metadata.emplace_back("family", f.name());
    return r;
}

/// Ostrowski-type inequality via Pompeiu's mean value theorem,
///   |(A/x) f(x) - mean(f)| <= (b-a)/|x| [1/4 + ((x - A)/(b-a))^2] ||f - l f'||,
/// where A is the interval midpoint and l(t) = t. The constant 1/4 is sharp:
/// affine f at x = a or x = b attains equality.
inline bound_report pompeiu_bound(const function_model& f, const interval& iv, double x,
                                  double tol = oracle::default_tol) {
    detail::require_contained(iv, x, "pompeiu_bound");
    const double mean = detail::mean_value(f, iv, tol);
    const norm_result nr = f.deviation_norm(iv);
    const double A = iv.midpoint();
    const double lhs = std::abs(A * f(x) / x - mean);
    const double u = (x - A) / iv.width();
    const double rhs = iv.width() / std::abs(x) * (0.25 + u * u) * nr.value;
    auto r = detail::make_report("3.1", iv.a(), iv.b(), x, lhs, rhs, nr.rigorous);
    r.metadata.emplace_back("family", f.name());
    return r;
}

/// Midpoint corollary of the Pompeiu-type bound (x = A):
///   |f(A) - mean(f)| <= (b-a)/(2|a+b|) ||f - l f'||.
inline bound_report midpoint_bound(const function_model& f, const interval& iv,
                                   double tol = oracle::default_tol) {
    const double A = iv.midpoint();
    const double mean = detail::mean_value(f, iv, tol);
    const norm_result nr = f.deviation_norm(iv);
    const double lhs = std::abs(f(A) - mean);
    const double rhs = iv.width() / (2.0 * std::abs(iv.a() + iv.b())) * nr.value;
    auto r = detail::make_report("3.6", iv.a(), iv.b(), A, lhs, rhs, nr.rigorous);
    r.metadata.emplace_back("family", f.name());
    return r;
}

/// Normalized gap probing the sharpness of the 1/4 constant: for affine
/// f(t) = 2t + beta this returns
///   lhs |x| / ((b-a) |beta|) - ((x - A)/(b-a))^2,
/// which equals 1/4 exactly at x = a and x = b and stays below elsewhere.
inline double sharpness_probe(const interval& iv, double beta, double x,
                              double tol = oracle::default_tol) {
    if (beta == 0.0)
        throw std::invalid_argument("sharpness_probe: beta must be nonzero");
    detail::require_contained(iv, x, "sharpness_probe");
    const auto f = function_model::affine(2.0, beta);
    const auto r = pompeiu_bound(f, iv, x, tol);
    const double u = (x - iv.midpoint()) / iv.width();
    return r.lhs * std::abs(x) / (iv.width() * std::abs(beta)) - u * u;
}

/// The bracket of the weighted inequality,
///   sgn(x) (W[a,x] - W[x,b]) + (T[x,b] - T[a,x]) / |x|
/// with W the weight integrals and T the first-moment integrals. Identical
/// to (1/|x|) * integral of w(t)|x - t| dt.
inline double weighted_bracket(const interval& iv, const weight_model& w, double x,
                               double tol = oracle::default_tol) {
    detail::require_contained(iv, x, "weighted_bracket");
    const double sgn = x > 0.0 ? 1.0 : -1.0;
    const double w_ax = detail::weight_integral(w.eval, w, iv.a(), x, tol);
    const double w_xb = detail::weight_integral(w.eval, w, x, iv.b(), tol);
    const double t_ax = detail::weight_integral([&](double t) { return t * w(t); }, w, iv.a(), x, tol);
    const double t_xb = detail::weight_integral([&](double t) { return t * w(t); }, w, x, iv.b(), tol);
    return sgn * (w_ax - w_xb) + (t_xb - t_ax) / std::abs(x);
}

/// Weighted Ostrowski-type inequality,
///   |f(x)/x * T - integral of f w| <= bracket(x) ||f - l f'||,
/// where T is the first moment of w. Reduces to the unweighted bound (times
/// b - a) at w = 1.
inline bound_report weighted_bound(const function_model& f, const interval& iv,
                                   const weight_model& w, double x,
                                   double tol = oracle::default_tol) {
    detail::require_contained(iv, x, "weighted_bound");
    detail::check_weight(w, iv);
    const norm_result nr = f.deviation_norm(iv);
    const double fw =
        detail::weight_integral([&](double t) { return f(t) * w(t); }, w, iv.a(), iv.b(), tol);
    const double tw =
        detail::weight_integral([&](double t) { return t * w(t); }, w, iv.a(), iv.b(), tol);
    const double lhs = std::abs(f(x) / x * tw - fw);
    const double rhs = weighted_bracket(iv, w, x, tol) * nr.value;
    auto r = detail::make_report("4.1", iv.a(), iv.b(), x, lhs, rhs, nr.rigorous);
    r.metadata.emplace_back("family", f.name());
    r.metadata.emplace_back("weight", w.description);
    return r;
}

/// Weighted mean point x* = (integral of t w) / (integral of w), clamped
/// into [a, b] to shed rounding dust. Throws zero_weight when the weight
/// mass is below tol.
inline double weighted_mean_point(const interval& iv, const weight_model& w,
                                  double tol = oracle::default_tol) {
    detail::check_weight(w, iv);
    const double mass = detail::weight_integral(w.eval, w, iv.a(), iv.b(), tol);
    if (mass <= 1e-12)
        throw zero_weight("weighted_mean_point: weight mass " + std::to_string(mass) +
                          " is too small to define a mean point");
    const double moment =
        detail::weight_integral([&](double t) { return t * w(t); }, w, iv.a(), iv.b(), tol);
    return std::clamp(moment / mass, iv.a(), iv.b());
}

/// Weighted bound anchored at the weighted mean point x*; for 0 < a < b,
///   |f(x*) - (integral of f w)/W| <= [(W[a,x*] - W[x*,b])/W + (T[x*,b] - T[a,x*])/T] ||f - l f'||
/// with W the weight mass and T its first moment.
inline bound_report weighted_midpoint_bound(const function_model& f, const interval& iv,
                                            const weight_model& w,
                                            double tol = oracle::default_tol) {
    if (!iv.positive())
        throw std::invalid_argument("weighted_midpoint_bound: requires 0 < a < b");
    detail::check_weight(w, iv);
    const double mass = detail::weight_integral(w.eval, w, iv.a(), iv.b(), tol);
    if (mass <= 1e-12)
        throw zero_weight("weighted_midpoint_bound: weight mass " + std::to_string(mass) +
                          " is too small");
    const double moment =
        detail::weight_integral([&](double t) { return t * w(t); }, w, iv.a(), iv.b(), tol);
    const double xs = std::clamp(moment / mass, iv.a(), iv.b());

    const norm_result nr = f.deviation_norm(iv);
    const double fw =
        detail::weight_integral([&](double t) { return f(t) * w(t); }, w, iv.a(), iv.b(), tol);
    const double w_ax = detail::weight_integral(w.eval, w, iv.a(), xs, tol);
    const double w_xb = detail::weight_integral(w.eval, w, xs, iv.b(), tol);
    const double t_ax = detail::weight_integral([&](double t) { return t * w(t); }, w, iv.a(), xs, tol);
    const double t_xb = detail::weight_integral([&](double t) { return t * w(t); }, w, xs, iv.b(), tol);

    const double lhs = std::abs(f(xs) - fw / mass);
    const double rhs = ((w_ax - w_xb) / mass + (t_xb - t_ax) / moment) * nr.value;
    auto r = detail::make_report("4.4", iv.a(), iv.b(), xs, lhs, rhs, nr.rigorous);
    r.metadata.emplace_back("family", f.name());
    r.metadata.emplace_back("weight", w.description);
    return r;
}

/// |A^p - L_p^p| <= (b-a)/(4A) * max over [a,b] of |1-p| t^p, for p outside
/// {0, -1}. The max is (1-p) a^p for p < 0 and |1-p| b^p for p > 0.
inline bound_report p_mean_inequality(const positive_pair& pr, double p) {
    if (std::abs(p) < 1e-8 || std::abs(p + 1.0) < 1e-8)
        throw std::invalid_argument("p_mean_inequality: p must avoid 0 and -1");
    const double a = pr.lo(), b = pr.hi();
    const double A = arithmetic_mean(pr);
    double lp_p; // L_p(a,b)^p, computed directly to avoid the p-th root round trip
    if (pr.degenerate()) {
        lp_p = std::pow(a, p);
    } else {
        const double s = p + 1.0;
        const double la = std::log(a), lb = std::log(b);
        const double base = s > 0.0 ? lb : la;
        const double other = s > 0.0 ? la : lb;
        const double mag = std::exp(s * base + std::log(-std::expm1(s * (other - base))));
        lp_p = mag / (std::abs(s) * (b - a));
    }
    const double lhs = std::abs(std::pow(A, p) - lp_p);
    const double dev_max = p < 0.0 ? (1.0 - p) * std::pow(a, p)
                                   : std::abs(1.0 - p) * std::pow(b, p);
    const double rhs = 0.25 * (b - a) / A * dev_max;
    auto r = detail::make_report("6.2", a, b, std::nullopt, lhs, rhs, true);
    char pbuf[32];
    std::snprintf(pbuf, sizeof pbuf, "%g", p);
    r.metadata.emplace_back("p", pbuf);
    return r;
}

/// 0 <= A - L <= (b-a) L / (2a): arithmetic vs logarithmic mean.
inline bound_report log_mean_inequality(const positive_pair& pr) {
    const double a = pr.lo(), b = pr.hi();
    const double A = arithmetic_mean(pr);
    const double L = logarithmic_mean(pr);
    const double lhs = A - L;
    const double rhs = (b - a) * L / (2.0 * a);
    auto r = detail::make_report("6.3", a, b, std::nullopt, lhs, rhs, true);
    return r;
}

/// 1 <= A/I <= exp[ (b-a)/(4A) * max(|ln a - 1|, |ln b - 1|) ]: arithmetic
/// vs identric mean.
inline bound_report identric_mean_inequality(const positive_pair& pr) {
    const double a = pr.lo(), b = pr.hi();
    const double A = arithmetic_mean(pr);
    const double I = identric_mean(pr);
    const double lhs = A / I;
    const double dev_max = std::max(std::abs(std::log(a) - 1.0), std::abs(std::log(b) - 1.0));
    const double rhs = std::exp((b - a) / (4.0 * A) * dev_max);
    auto r = detail::make_report("6.4", a, b, std::nullopt, lhs, rhs, true);
    return r;
}

} // namespace ostrowski
