#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ostrowski {

/// Two positive reals held in canonical order lo <= hi. Every classical
/// two-argument mean is symmetric, so arguments may arrive in either order.
class positive_pair {
public:
    positive_pair(double x, double y) : lo_(x), hi_(y) {
        if (!std::isfinite(x) || !std::isfinite(y) || !(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("positive_pair: both values must be finite and > 0");
        if (lo_ > hi_) std::swap(lo_, hi_);
    }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool degenerate() const { return lo_ == hi_; }

private:
    double lo_;
    double hi_;
};

inline double arithmetic_mean(const positive_pair& p) {
    return 0.5 * (p.lo() + p.hi());
}

inline double geometric_mean(const positive_pair& p) {
    return std::sqrt(p.lo() * p.hi());
}

inline double harmonic_mean(const positive_pair& p) {
    return 2.0 * p.lo() * p.hi() / (p.lo() + p.hi());
}

/// (b - a) / (ln b - ln a), extended by continuity to a at a == b.
inline double logarithmic_mean(const positive_pair& p) {
    if (p.degenerate()) return p.lo();
    return (p.hi() - p.lo()) / (std::log(p.hi()) - std::log(p.lo()));
}

/// Identric mean (1/e)(b^b / a^a)^{1/(b-a)}, evaluated in the log domain so
/// b^b cannot overflow. Continuity limit a at a == b.
inline double identric_mean(const positive_pair& p) {
    if (p.degenerate()) return p.lo();
    const double a = p.lo(), b = p.hi();
    return std::exp((b * std::log(b) - a * std::log(a)) / (b - a) - 1.0);
}

/// p-logarithmic mean [(b^{p+1} - a^{p+1}) / ((p+1)(b-a))]^{1/p}.
///
/// The removable singularities are taken by a hard switch: the identric mean
/// for |p| < 1e-8 and the logarithmic mean for |p+1| < 1e-8, where the raw
/// formula has lost all precision anyway. Evaluated in the log domain, with
/// the power difference routed through expm1 so nearby exponents do not
/// cancel.
inline double p_logarithmic_mean(const positive_pair& pr, double p) {
    if (pr.degenerate()) return pr.lo();
    if (std::abs(p) < 1e-8) return identric_mean(pr);
    if (std::abs(p + 1.0) < 1e-8) return logarithmic_mean(pr);

    const double a = pr.lo(), b = pr.hi();
    const double s = p + 1.0;
    const double la = std::log(a), lb = std::log(b);
    // |b^s - a^s| = exp(s*base) * (1 - exp(s*(other-base))) with base chosen
    // so the second factor lies in (0,1).
    const double base = s > 0.0 ? lb : la;
    const double other = s > 0.0 ? la : lb;
    const double log_num = s * base + std::log(-std::expm1(s * (other - base)));
    const double log_den = std::log(std::abs(s)) + std::log(b - a);
    return std::exp((log_num - log_den) / p);
}

} // namespace ostrowski
