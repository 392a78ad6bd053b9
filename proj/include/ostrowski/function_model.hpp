#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ostrowski {

/// Closed interval [a, b] with a < b that stays on one side of zero. Every
/// bound in this library divides by points of the interval, so 0 must not be
/// an interior or boundary point.
class interval {
public:
    interval(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
            throw std::invalid_argument("interval: endpoints must be finite with a < b");
        const bool pos = a > 0.0 && b > 0.0;
        const bool neg = a < 0.0 && b < 0.0;
        if (!pos && !neg)
            throw std::invalid_argument("interval: [a, b] must not contain 0");
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double width() const { return b_ - a_; }
    double midpoint() const { return 0.5 * (a_ + b_); }
    bool contains(double t) const { return t >= a_ && t <= b_; }
    bool positive() const { return a_ > 0.0; }

    /// min |t| over the interval; the denominator of every worst-case bound.
    double min_abs() const { return std::min(std::abs(a_), std::abs(b_)); }

private:
    double a_;
    double b_;
};

/// Value of a sup-norm together with whether it came from a closed form
/// (rigorous) or from sampling (an estimate that can only under-report).
struct norm_result {
    double value = 0.0;
    bool rigorous = false;
};

enum class family_kind { affine, power, reciprocal, logarithm, custom };

/// Differentiable scalar function bundled with its exact derivative.
///
/// The quantity this library cares about is the deviation f(t) - t f'(t),
/// i.e. the y-intercept of the tangent at t; its sup norm over an interval
/// drives every bound. The built-in families carry closed-form norms; custom
/// models fall back to a sampled estimate unless the caller supplies one.
class function_model {
public:
    static function_model affine(double alpha, double beta) {
        function_model m(family_kind::affine, format_name("affine:%g,%g", alpha, beta));
        m.p0_ = alpha;
        m.p1_ = beta;
        return m;
    }

    static function_model power(double exponent) {
        function_model m(family_kind::power, format_name("power:%g", exponent));
        m.p0_ = exponent;
        return m;
    }

    static function_model reciprocal() {
        return function_model(family_kind::reciprocal, "reciprocal");
    }

    static function_model logarithm() {
        return function_model(family_kind::logarithm, "log");
    }

    static function_model custom(std::string name,
                                 std::function<double(double)> f,
                                 std::function<double(double)> df,
                                 std::function<double(const interval&)> sup_deviation = {}) {
        if (!f || !df)
            throw std::invalid_argument("function_model::custom: f and df are required");
        function_model m(family_kind::custom, std::move(name));
        m.f_ = std::move(f);
        m.df_ = std::move(df);
        m.norm_ = std::move(sup_deviation);
        return m;
    }

    double operator()(double t) const {
        switch (kind_) {
            case family_kind::affine: return p0_ * t + p1_;
            case family_kind::power: return std::pow(require_positive(t), p0_);
            case family_kind::reciprocal: return 1.0 / require_nonzero(t);
            case family_kind::logarithm: return std::log(require_positive(t));
            case family_kind::custom: return f_(t);
        }
        throw std::logic_error("function_model: bad kind");
    }

    double derivative(double t) const {
        switch (kind_) {
            case family_kind::affine: return p0_;
            case family_kind::power: return p0_ * std::pow(require_positive(t), p0_ - 1.0);
            case family_kind::reciprocal: {
                const double u = require_nonzero(t);
                return -1.0 / (u * u);
            }
            case family_kind::logarithm: return 1.0 / require_positive(t);
            case family_kind::custom: return df_(t);
        }
        throw std::logic_error("function_model: bad kind");
    }

    /// f(t) - t f'(t). Always this composition, for every family, so a model
    /// whose derivative is inconsistent with its values stays observable.
    double deviation(double t) const { return operator()(t) - t * derivative(t); }

    /// sup over [a, b] of |f(t) - t f'(t)|. Closed form where the family has
    /// one, sampled estimate otherwise.
    norm_result deviation_norm(const interval& iv) const;

    family_kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    function_model(family_kind kind, std::string name)
        : kind_(kind), name_(std::move(name)) {}

    static std::string format_name(const char* fmt, double u, double v = 0.0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, fmt, u, v);
        return buf;
    }

    double require_positive(double t) const {
        if (!(t > 0.0))
            throw std::domain_error(name_ + ": evaluation requires t > 0, got t = " + std::to_string(t));
        return t;
    }

    double require_nonzero(double t) const {
        if (t == 0.0)
            throw std::domain_error(name_ + ": evaluation requires t != 0");
        return t;
    }

    family_kind kind_;
    std::string name_;
    double p0_ = 0.0;
    double p1_ = 0.0;
    std::function<double(double)> f_;
    std::function<double(double)> df_;
    std::function<double(const interval&)> norm_;
};

namespace detail {

/// Golden-section search for the maximum of phi on [lo, hi]. phi must be
/// unimodal there for the result to be exact; callers only pass brackets one
/// grid cell wide, where that is a safe assumption.
template <class Phi>
double golden_max(const Phi& phi, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = phi(x1), f2 = phi(x2);
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = phi(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = phi(x1);
        }
    }
    return std::max(f1, f2);
}

/// Sampled sup of |phi| over [a, b]: a dense uniform grid, then local
/// refinement around the three best cells. Never an overestimate.
template <class Phi>
double sampled_sup(const Phi& phi, double a, double b) {
    constexpr int n = 4096;
    const double h = (b - a) / n;
    std::array<int, 3> top{0, 0, 0};
    std::array<double, 3> top_val{-1.0, -1.0, -1.0};
    double best = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double t = k == n ? b : a + k * h;
        const double v = std::abs(phi(t));
        best = std::max(best, v);
        for (int j = 0; j < 3; ++j) {
            if (v > top_val[j]) {
                for (int i = 2; i > j; --i) {
                    top_val[i] = top_val[i - 1];
                    top[i] = top[i - 1];
                }
                top_val[j] = v;
                top[j] = k;
                break;
            }
        }
    }
    auto abs_phi = [&](double t) { return std::abs(phi(t)); };
    for (int j = 0; j < 3; ++j) {
        const double lo = std::max(a, a + (top[j] - 1) * h);
        const double hi = std::min(b, a + (top[j] + 1) * h);
        best = std::max(best, golden_max(abs_phi, lo, hi));
    }
    return best;
}

} // namespace detail

/// Sampled estimate of sup |f(t) - t f'(t)| over iv. Available for any model;
/// the result is a lower bound on the true sup, hence never rigorous.
inline norm_result numeric_deviation_norm(const function_model& m, const interval& iv) {
    const double v = detail::sampled_sup([&](double t) { return m.deviation(t); }, iv.a(), iv.b());
    return {v, false};
}

/// Sampled estimate of sup |f'| over iv, for bounds that need a Lipschitz
/// constant the caller did not supply.
inline double numeric_sup_derivative(const function_model& m, const interval& iv) {
    return detail::sampled_sup([&](double t) { return m.derivative(t); }, iv.a(), iv.b());
}

inline norm_result function_model::deviation_norm(const interval& iv) const {
    switch (kind_) {
        case family_kind::affine:
            // deviation is identically beta
            return {std::abs(p1_), true};
        case family_kind::power: {
            if (!iv.positive())
                throw std::domain_error("power: deviation norm requires a positive interval");
            // |1-p| t^p is monotone in t, so the sup sits at an endpoint.
            const double va = std::pow(iv.a(), p0_);
            const double vb = std::pow(iv.b(), p0_);
            return {std::abs(1.0 - p0_) * std::max(va, vb), true};
        }
        case family_kind::reciprocal:
            // |2/t| peaks at the endpoint closest to zero; sign-safe.
            return {2.0 / iv.min_abs(), true};
        case family_kind::logarithm: {
            if (!iv.positive())
                throw std::domain_error("log: deviation norm requires a positive interval");
            // |ln t - 1| is convex with minimum at t = e, so check endpoints.
            const double va = std::abs(std::log(iv.a()) - 1.0);
            const double vb = std::abs(std::log(iv.b()) - 1.0);
            return {std::max(va, vb), true};
        }
        case family_kind::custom:
            if (norm_) return {norm_(iv), true};
            return numeric_deviation_norm(*this, iv);
    }
    throw std::logic_error("function_model: bad kind");
}

/// Parse a family spec string: "affine:A,B", "power:P", "reciprocal", "log".
inline function_model parse_function(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto parse_number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_function: bad number '" + s + "' in '" + spec + "'");
        }
        if (used != s.size() || !std::isfinite(v))
            throw std::invalid_argument("parse_function: bad number '" + s + "' in '" + spec + "'");
        return v;
    };

    if (head == "affine") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("parse_function: affine needs two parameters, e.g. affine:2,3");
        return function_model::affine(parse_number(args.substr(0, comma)),
                                      parse_number(args.substr(comma + 1)));
    }
    if (head == "power") {
        if (args.empty())
            throw std::invalid_argument("parse_function: power needs an exponent, e.g. power:-2");
        return function_model::power(parse_number(args));
    }
    if (head == "reciprocal" && args.empty()) return function_model::reciprocal();
    if ((head == "log" || head == "logarithm") && args.empty()) return function_model::logarithm();
    throw std::invalid_argument("parse_function: unknown family '" + spec + "'");
}

} // namespace ostrowski
