#pragma once

#include "function_model.hpp"
#include "oracle.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ostrowski {

enum class intermediate_rule { midpoint, left, right };

/// Strictly increasing nodes a = x_0 < ... < x_n = b with 0 < a, plus one
/// intermediate point xi_i in each [x_i, x_{i+1}]. The quadrature rules below
/// are only proved for intervals to the right of zero, so positivity is part
/// of the invariant rather than the caller's problem.
class partition {
public:
    partition(std::vector<double> nodes, std::vector<double> intermediates)
        : nodes_(std::move(nodes)), xi_(std::move(intermediates)) {
        if (nodes_.size() < 2)
            throw std::invalid_argument("partition: need at least two nodes");
        if (!(nodes_.front() > 0.0))
            throw std::invalid_argument("partition: nodes must satisfy 0 < x_0");
        for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
            if (!(nodes_[i] < nodes_[i + 1]))
                throw std::invalid_argument("partition: nodes must be strictly increasing");
        if (xi_.size() != nodes_.size() - 1)
            throw std::invalid_argument("partition: need one intermediate point per subinterval");
        for (std::size_t i = 0; i < xi_.size(); ++i)
            if (!(nodes_[i] <= xi_[i] && xi_[i] <= nodes_[i + 1]))
                throw std::invalid_argument("partition: intermediate point outside its subinterval");
        for (double v : nodes_)
            if (!std::isfinite(v))
                throw std::invalid_argument("partition: nodes must be finite");
    }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& intermediates() const { return xi_; }
    std::size_t size() const { return xi_.size(); } ///< number of subintervals
    double a() const { return nodes_.front(); }
    double b() const { return nodes_.back(); }

private:
    std::vector<double> nodes_;
    std::vector<double> xi_;
};

inline partition uniform_partition(const interval& iv, std::size_t n,
                                   intermediate_rule rule = intermediate_rule::midpoint) {
    if (!iv.positive())
        throw std::invalid_argument("uniform_partition: quadrature requires 0 < a < b");
    if (n == 0)
        throw std::invalid_argument("uniform_partition: need n >= 1");
    std::vector<double> nodes(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        nodes[i] = i == n ? iv.b() : iv.a() + static_cast<double>(i) * iv.width() / static_cast<double>(n);
    std::vector<double> xi(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (rule) {
            case intermediate_rule::midpoint: xi[i] = 0.5 * (nodes[i] + nodes[i + 1]); break;
            case intermediate_rule::left: xi[i] = nodes[i]; break;
            case intermediate_rule::right: xi[i] = nodes[i + 1]; break;
        }
    }
    return partition(std::move(nodes), std::move(xi));
}

/// Riemann-type rule built on the Pompeiu deviation:
///   S = sum_i f(xi_i)/xi_i * (x_{i+1}^2 - x_i^2)/2.
/// Each term is grouped as f(xi_i) * ((mid_i / xi_i) * h_i), which collapses
/// bitwise to the plain midpoint term when xi_i = mid_i.
inline double pompeiu_rule(const function_model& f, const partition& p) {
    const auto& x = p.nodes();
    const auto& xi = p.intermediates();
    double sum = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const double h = x[i + 1] - x[i];
        const double mid = 0.5 * (x[i] + x[i + 1]);
        // (x_{i+1}^2 - x_i^2)/2 = mid * h, exactly in this factored form
        sum += f(xi[i]) * ((mid / xi[i]) * h);
    }
    return sum;
}

/// Composite midpoint rule on the same nodes (ignores intermediates).
inline double midpoint_rule(const function_model& f, const partition& p) {
    const auto& x = p.nodes();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        const double mid = 0.5 * (x[i] + x[i + 1]);
        sum += f(mid) * h;
    }
    return sum;
}

/// Nested remainder bounds for the Pompeiu rule, loosest last:
///   tier1 = ||f - l f'|| sum_i h_i^2/xi_i [1/4 + ((xi_i - mid_i)/h_i)^2]
///   tier2 = ||f - l f'|| / 2 * sum_i h_i^2 / xi_i
///   tier3 = ||f - l f'|| / (2a) * sum_i h_i^2
/// Terms are accumulated so that tier1 <= tier2 <= tier3 holds in floating
/// point, not just in exact arithmetic: the bracket is clamped at 1/2 and
/// each tier3 term divides by a instead of scaling the finished sum.
struct remainder_tiers {
    double tier1 = 0.0;
    double tier2 = 0.0;
    double tier3 = 0.0;
    bool rigorous = true;
};

inline remainder_tiers remainder_bounds(const function_model& f, const partition& p) {
    const interval iv(p.a(), p.b());
    const norm_result nr = f.deviation_norm(iv);
    const auto& x = p.nodes();
    const auto& xi = p.intermediates();
    const double a = p.a();
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const double h = x[i + 1] - x[i];
        const double mid = 0.5 * (x[i] + x[i + 1]);
        const double d = (xi[i] - mid) / h;
        // |xi - mid| <= h/2 makes d^2 <= 1/4 exact; the clamp removes any
        // rounding overshoot so the 1/4 + d^2 factor never exceeds 1/2.
        const double dd = std::min(d * d, 0.25);
        const double h2_xi = h * h / xi[i];
        s1 += h2_xi * (0.25 + dd);
        s2 += 0.5 * h2_xi;
        s3 += 0.5 * (h * h / a);
    }
    remainder_tiers t;
    t.tier1 = nr.value * s1;
    t.tier2 = nr.value * s2;
    t.tier3 = nr.value * s3;
    t.rigorous = nr.rigorous;
    return t;
}

/// Remainder bounds for the midpoint specialization:
///   tight  = ||f - l f'|| / 2 * sum_i h_i^2 / (x_i + x_{i+1})  (xi_i = mid_i in tier2)
///   coarse = ||f - l f'|| / (4a) * sum_i h_i^2
struct midpoint_tiers {
    double tight = 0.0;
    double coarse = 0.0;
    bool rigorous = true;
};

inline midpoint_tiers midpoint_remainder(const function_model& f, const partition& p) {
    const interval iv(p.a(), p.b());
    const norm_result nr = f.deviation_norm(iv);
    const auto& x = p.nodes();
    const double a = p.a();
    double st = 0.0, sc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        st += 0.5 * (h * h / (x[i] + x[i + 1]));
        sc += 0.25 * (h * h / a);
    }
    midpoint_tiers t;
    t.tight = nr.value * st;
    t.coarse = nr.value * sc;
    t.rigorous = nr.rigorous;
    return t;
}

/// Smallest n for which the coarse uniform bound certifies eps:
///   ||f - l f'|| / (2a) * (b-a)^2 / n <= eps.
inline std::size_t n_for_tolerance(const function_model& f, const interval& iv, double eps) {
    if (!iv.positive())
        throw std::invalid_argument("n_for_tolerance: quadrature requires 0 < a < b");
    if (!(eps > 0.0))
        throw std::invalid_argument("n_for_tolerance: eps must be > 0");
    const norm_result nr = f.deviation_norm(iv);
    if (nr.value == 0.0) return 1;
    const double target = nr.value * iv.width() * iv.width() / (2.0 * iv.a());
    double n_real = std::ceil(target / eps);
    if (n_real < 1.0) n_real = 1.0;
    if (n_real > 1e9)
        throw std::invalid_argument("n_for_tolerance: eps requires more than 1e9 subintervals");
    auto n = static_cast<std::size_t>(n_real);
    // ceil() decided in real arithmetic; settle the boundary cases in the
    // same arithmetic the certificate uses.
    while (target / static_cast<double>(n) > eps) ++n;
    while (n > 1 && target / static_cast<double>(n - 1) <= eps) --n;
    return n;
}

enum class quadrature_kind { general, midpoint };

inline const char* to_string(quadrature_kind k) {
    return k == quadrature_kind::midpoint ? "midpoint" : "general";
}

/// A quadrature value bundled with its certificate: the nested remainder
/// tiers, the oracle reference, and the observed error. actual_error <= tier1
/// is the accuracy contract; the tiers themselves are ordered by
/// construction.
struct quadrature_result {
    std::size_t n = 0;
    quadrature_kind rule = quadrature_kind::general;
    double value = 0.0;
    double reference = 0.0;
    double actual_error = 0.0;
    double tier1 = 0.0;
    double tier2 = 0.0;
    double tier3 = 0.0;
    bool rigorous = true;
};

/// Evaluate the Pompeiu rule on an explicit partition and wrap it in a full
/// certificate against the reference integrator.
inline quadrature_result evaluate_partition(const function_model& f, const partition& p,
                                            quadrature_kind rule,
                                            double tol = oracle::default_tol) {
    quadrature_result r;
    r.n = p.size();
    r.rule = rule;
    r.value = pompeiu_rule(f, p);
    r.reference = oracle::integrate([&](double t) { return f(t); }, p.a(), p.b(), tol).value;
    r.actual_error = std::abs(r.reference - r.value);
    const remainder_tiers t = remainder_bounds(f, p);
    r.tier1 = t.tier1;
    r.tier2 = t.tier2;
    r.tier3 = t.tier3;
    r.rigorous = t.rigorous;
    return r;
}

/// Integrate f over iv with certified absolute error <= eps: pick n from the
/// coarse bound, evaluate on the uniform midpoint partition, and re-check the
/// recomputed tier3 against eps (growing n if summation rounding landed a
/// hair above).
inline quadrature_result integrate_with_certificate(const function_model& f, const interval& iv,
                                                    double eps,
                                                    double tol = oracle::default_tol) {
    std::size_t n = n_for_tolerance(f, iv, eps);
    for (;;) {
        const partition p = uniform_partition(iv, n, intermediate_rule::midpoint);
        quadrature_result r = evaluate_partition(f, p, quadrature_kind::midpoint, tol);
        if (r.tier3 <= eps || n >= 2000000000) return r;
        n += 1 + n / 64;
    }
}

} // namespace ostrowski
