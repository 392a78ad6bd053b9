#include "ostrowski/quadrature.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace ostrowski;

namespace {

std::vector<function_model> built_ins() {
    std::vector<function_model> fams;
    fams.push_back(function_model::affine(2.0, 3.0));
    fams.push_back(function_model::power(2.0));
    fams.push_back(function_model::power(-2.0));
    fams.push_back(function_model::reciprocal());
    fams.push_back(function_model::logarithm());
    return fams;
}

partition random_partition(std::mt19937_64& rng, double a, double b, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> cuts(n - 1);
    for (auto& c : cuts) c = a + (b - a) * (0.05 + 0.9 * u(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> nodes;
    nodes.push_back(a);
    for (double c : cuts)
        if (c > nodes.back() + 1e-6) nodes.push_back(c);
    nodes.push_back(b);
    std::vector<double> xi(nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        xi[i] = nodes[i] + u(rng) * (nodes[i + 1] - nodes[i]);
    return partition(std::move(nodes), std::move(xi));
}

} // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(partition({1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(partition({1.0, 2.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(partition({2.0, 1.0}, {1.5}), std::invalid_argument);
    CHECK_THROWS_AS(partition({1.0, 1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(partition({0.0, 1.0}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(partition({-1.0, 1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(partition({1.0, 2.0}, {2.5}), std::invalid_argument);
    CHECK_THROWS_AS(partition({1.0, 2.0, 3.0}, {1.5}), std::invalid_argument);

    const partition p({1.0, 1.5, 2.0}, {1.2, 1.8});
    CHECK(p.size() == 2);
    CHECK(p.a() == 1.0);
    CHECK(p.b() == 2.0);
}

TEST_CASE("uniform partitions place nodes and intermediates exactly") {
    interval iv(1.0, 2.0);
    const partition mid = uniform_partition(iv, 4);
    CHECK(mid.nodes() == std::vector<double>{1.0, 1.25, 1.5, 1.75, 2.0});
    CHECK(mid.intermediates() == std::vector<double>{1.125, 1.375, 1.625, 1.875});

    const partition left = uniform_partition(iv, 2, intermediate_rule::left);
    CHECK(left.intermediates() == std::vector<double>{1.0, 1.5});
    const partition right = uniform_partition(iv, 2, intermediate_rule::right);
    CHECK(right.intermediates() == std::vector<double>{1.5, 2.0});

    CHECK_THROWS_AS(uniform_partition(iv, 0), std::invalid_argument);
    CHECK_THROWS_AS(uniform_partition(interval(-2.0, -1.0), 2), std::invalid_argument);
}

TEST_CASE("pompeiu rule at hand-checked values") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    // n = 1, xi = 3/2: f(xi)/xi * (b^2-a^2)/2 = (4/9)(3/2) = 2/3
    const partition p1({1.0, 2.0}, {1.5});
    CHECK(pompeiu_rule(rec, p1) == Catch::Approx(2.0 / 3.0).epsilon(1e-15));

    // f = t is integrated exactly for every choice of intermediates
    const auto ident = function_model::power(1.0);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const partition p = random_partition(rng, 1.0, 2.0, 6);
        REQUIRE(pompeiu_rule(ident, p) == Catch::Approx(1.5).epsilon(1e-14));
    }

    // f = 1: S picks up mid/xi, near 1 but not exact off the midpoint
    const auto one = function_model::affine(0.0, 1.0);
    const partition off({1.0, 2.0}, {1.2});
    CHECK(pompeiu_rule(one, off) == Catch::Approx(1.5 / 1.2).epsilon(1e-15));
}

TEST_CASE("midpoint rule at hand-checked values") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    const partition p1 = uniform_partition(iv, 1);
    CHECK(midpoint_rule(rec, p1) == Catch::Approx(2.0 / 3.0).epsilon(1e-15));
    const partition p2 = uniform_partition(iv, 2);
    // 0.5 (1/1.25 + 1/1.75) = 24/35
    CHECK(midpoint_rule(rec, p2) == Catch::Approx(24.0 / 35.0).epsilon(1e-14));

    const auto aff = function_model::affine(2.0, 3.0);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        const partition p = random_partition(rng, 0.5, 3.0, 5);
        // midpoint rule is exact on affine integrands
        REQUIRE(midpoint_rule(aff, p) == Catch::Approx(2.0 * (9.0 - 0.25) / 2.0 + 3.0 * 2.5)
                                             .epsilon(1e-13));
    }
}

TEST_CASE("pompeiu rule with midpoint intermediates IS the midpoint rule") {
    std::mt19937_64 rng(13);
    for (const auto& f : built_ins()) {
        for (std::size_t n : {1u, 2u, 5u, 16u}) {
            const interval iv(0.5, 3.5);
            const partition p = uniform_partition(iv, n);
            REQUIRE(pompeiu_rule(f, p) == midpoint_rule(f, p)); // bitwise
        }
        // non-uniform nodes, midpoint intermediates
        std::vector<double> nodes{0.5, 0.8, 1.7, 2.2, 3.5};
        std::vector<double> xi(nodes.size() - 1);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            xi[i] = 0.5 * (nodes[i] + nodes[i + 1]);
        const partition p(nodes, xi);
        REQUIRE(pompeiu_rule(f, p) == midpoint_rule(f, p));
    }
}

TEST_CASE("remainder tiers at hand-checked values") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    // n = 1, xi = 3/2, norm = 2: tier1 = 2*(1/(3/2))(1/4) = 1/3,
    // tier2 = 2*(1/2)(1/(3/2)) = 2/3, tier3 = 2*(1/2)(1/1) = 1
    const partition p1({1.0, 2.0}, {1.5});
    const auto t = remainder_bounds(rec, p1);
    CHECK(t.tier1 == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(t.tier2 == Catch::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(t.tier3 == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(t.rigorous);

    // f = t: zero deviation norm wipes every tier
    const auto zero = remainder_bounds(function_model::power(1.0), p1);
    CHECK(zero.tier1 == 0.0);
    CHECK(zero.tier3 == 0.0);

    // endpoint intermediate sits at the clamp: tier1 = tier2
    const partition pl({1.0, 2.0}, {1.0});
    const auto tl = remainder_bounds(rec, pl);
    CHECK(tl.tier1 == Catch::Approx(tl.tier2).epsilon(1e-15));
}

TEST_CASE("tier ordering holds in floating point, term by term") {
    std::mt19937_64 rng(17);
    for (const auto& f : built_ins()) {
        for (int i = 0; i < 30; ++i) {
            const partition p = random_partition(rng, 0.1 + 2.0 * (i % 5), 3.0 + 2.0 * (i % 5), 8);
            const auto t = remainder_bounds(f, p);
            REQUIRE(t.tier1 <= t.tier2);
            REQUIRE(t.tier2 <= t.tier3);
        }
    }
}

TEST_CASE("midpoint remainder at hand-checked values") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    const auto t1 = midpoint_remainder(rec, uniform_partition(iv, 1));
    CHECK(t1.tight == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(t1.coarse == Catch::Approx(0.5).epsilon(1e-14));

    const auto t2 = midpoint_remainder(rec, uniform_partition(iv, 2));
    // 2*(1/4)(1/(5/2) + 1/(7/2)) = 6/35
    CHECK(t2.tight == Catch::Approx(6.0 / 35.0).epsilon(1e-13));
    CHECK(t2.coarse == Catch::Approx(0.25).epsilon(1e-14));

    // tight equals tier1 of the general bounds on the midpoint partition (d_i = 0 there)
    const auto gen = remainder_bounds(rec, uniform_partition(iv, 2));
    CHECK(t2.tight == Catch::Approx(gen.tier1).epsilon(1e-15));
    // and the coarse bound dominates it
    CHECK(t2.tight <= t2.coarse);
}

TEST_CASE("n_for_tolerance is exactly minimal") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    // norm (b-a)^2 / (2a) = 1, so eps = 0.01 needs exactly n = 100
    CHECK(n_for_tolerance(rec, iv, 0.01) == 100);
    CHECK(n_for_tolerance(rec, iv, 1.0) == 1);
    CHECK(n_for_tolerance(rec, iv, 0.5) == 2);
    // f = t certifies any eps with a single interval
    CHECK(n_for_tolerance(function_model::power(1.0), iv, 1e-12) == 1);
    CHECK_THROWS_AS(n_for_tolerance(rec, iv, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(n_for_tolerance(rec, iv, 1e-12), std::invalid_argument);

    // minimality: the bound at n fits under eps, at n-1 it does not
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& f : built_ins()) {
        for (int i = 0; i < 20; ++i) {
            const double lo = 0.2 + 3.0 * u(rng);
            interval rv(lo, lo + 0.3 + 4.0 * u(rng));
            const double norm = f.deviation_norm(rv).value;
            if (norm == 0.0) continue;
            const double eps = std::pow(10.0, -3.0 * u(rng));
            const std::size_t n = n_for_tolerance(f, rv, eps);
            const double target = norm * rv.width() * rv.width() / (2.0 * rv.a());
            REQUIRE(target / static_cast<double>(n) <= eps);
            if (n > 1) REQUIRE(target / static_cast<double>(n - 1) > eps);
        }
    }
}

TEST_CASE("certified integration meets its contract") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    const auto r = integrate_with_certificate(rec, iv, 0.01);
    CHECK(r.n == 100);
    CHECK(r.rule == quadrature_kind::midpoint);
    CHECK(std::abs(r.value - std::log(2.0)) <= 0.01);
    CHECK(r.reference == Catch::Approx(std::log(2.0)).margin(1e-9));
    CHECK(r.actual_error <= r.tier1);
    CHECK(r.tier3 <= 0.01);
    CHECK(r.tier3 == Catch::Approx(0.01).epsilon(1e-12));
    CHECK(r.rigorous);

    // f = t: one subinterval, every tier zero, exact value
    const auto exact = integrate_with_certificate(function_model::power(1.0), iv, 1e-3);
    CHECK(exact.n == 1);
    CHECK(exact.value == Catch::Approx(1.5).epsilon(1e-15));
    CHECK(exact.tier3 == 0.0);

    const auto lg = integrate_with_certificate(function_model::logarithm(), iv, 0.05);
    CHECK(std::abs(lg.value - (2.0 * std::log(2.0) - 1.0)) <= 0.05);
    CHECK(lg.actual_error <= lg.tier1);
}

TEST_CASE("actual error stays under tier1 across families and partitions") {
    std::mt19937_64 rng(23);
    for (const auto& f : built_ins()) {
        for (int i = 0; i < 10; ++i) {
            const partition p = random_partition(rng, 0.4, 4.0, 6);
            const auto r = evaluate_partition(f, p, quadrature_kind::general);
            const double margin = 1e-9 * std::max(1.0, std::abs(r.reference));
            REQUIRE(r.actual_error <= r.tier1 + margin);
            REQUIRE(r.tier1 <= r.tier2);
            REQUIRE(r.tier2 <= r.tier3);
        }
        for (std::size_t n : {1u, 2u, 4u, 8u, 32u}) {
            for (auto rule : {intermediate_rule::midpoint, intermediate_rule::left,
                              intermediate_rule::right}) {
                const partition p = uniform_partition(interval(0.5, 3.0), n, rule);
                const auto r = evaluate_partition(f, p,
                                                  rule == intermediate_rule::midpoint
                                                      ? quadrature_kind::midpoint
                                                      : quadrature_kind::general);
                const double margin = 1e-9 * std::max(1.0, std::abs(r.reference));
                REQUIRE(r.actual_error <= r.tier1 + margin);
            }
        }
    }
}

TEST_CASE("doubling n halves the coarse uniform bound exactly") {
    interval iv(1.0, 2.0);
    const auto rec = function_model::reciprocal();
    double prev = remainder_bounds(rec, uniform_partition(iv, 1)).tier3;
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
        const double cur = remainder_bounds(rec, uniform_partition(iv, n)).tier3;
        REQUIRE(cur == Catch::Approx(0.5 * prev).epsilon(1e-12));
        prev = cur;
    }
    // and the observed midpoint error drops at second order
    const double e4 = std::abs(midpoint_rule(rec, uniform_partition(iv, 4)) - std::log(2.0));
    const double e8 = std::abs(midpoint_rule(rec, uniform_partition(iv, 8)) - std::log(2.0));
    CHECK(e8 <= 0.3 * e4);
}
