#include "ostrowski/means.hpp"
#include "ostrowski/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace ostrowski;

namespace {

positive_pair sample_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(std::log(1e-3), std::log(1e3));
    const double x = std::exp(u(rng));
    double y = std::exp(u(rng));
    if (y == x) y *= 1.5;
    return positive_pair(x, y);
}

} // namespace

TEST_CASE("pair normalizes order and rejects bad input") {
    positive_pair p(2.0, 1.0);
    CHECK(p.lo() == 1.0);
    CHECK(p.hi() == 2.0);
    CHECK_FALSE(p.degenerate());
    CHECK(positive_pair(3.0, 3.0).degenerate());
    CHECK_THROWS_AS(positive_pair(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(positive_pair(-1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(positive_pair(1.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(positive_pair(std::nan(""), 1.0), std::invalid_argument);
}

TEST_CASE("classical means at hand-checked points") {
    positive_pair p12(1.0, 2.0);
    CHECK(arithmetic_mean(p12) == 1.5);
    CHECK(harmonic_mean(p12) == Catch::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(geometric_mean(p12) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(logarithmic_mean(p12) == Catch::Approx(1.0 / std::log(2.0)).epsilon(1e-14));
    CHECK(identric_mean(p12) == Catch::Approx(4.0 / std::exp(1.0)).epsilon(1e-14));

    positive_pair p14(1.0, 4.0);
    CHECK(arithmetic_mean(p14) == 2.5);
    CHECK(geometric_mean(p14) == 2.0);
    CHECK(logarithmic_mean(p14) == Catch::Approx(3.0 / std::log(4.0)).epsilon(1e-14));

    positive_pair p26(2.0, 6.0);
    CHECK(harmonic_mean(p26) == 3.0);

    const double e = std::exp(1.0);
    positive_pair p1e(1.0, e);
    CHECK(logarithmic_mean(p1e) == Catch::Approx(e - 1.0).epsilon(1e-14));
}

TEST_CASE("identric mean cross-checked against its integral form") {
    // ln I(a,b) = (1/(b-a)) * integral of ln t; check with the reference
    // integrator on two intervals.
    const double e = std::exp(1.0);
    for (auto [a, b] : {std::pair{1.0, e}, std::pair{1.0, 2.0}, std::pair{0.3, 7.0}}) {
        const double log_mean =
            oracle::integrate([](double t) { return std::log(t); }, a, b).value / (b - a);
        CHECK(identric_mean(positive_pair(a, b)) ==
              Catch::Approx(std::exp(log_mean)).epsilon(1e-9));
    }
    CHECK(identric_mean(positive_pair(1.0, e)) ==
          Catch::Approx(std::exp(1.0 / (e - 1.0))).epsilon(1e-14));
}

TEST_CASE("p-logarithmic mean: special points and limits") {
    positive_pair p12(1.0, 2.0);
    CHECK(p_logarithmic_mean(p12, 1.0) == Catch::Approx(1.5).epsilon(1e-13));
    CHECK(p_logarithmic_mean(p12, 2.0) == Catch::Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-13));
    // L_{-2} is the geometric mean
    CHECK(p_logarithmic_mean(p12, -2.0) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-13));
    // removable singularities route to I and L
    CHECK(p_logarithmic_mean(p12, 0.0) == identric_mean(p12));
    CHECK(p_logarithmic_mean(p12, -1.0) == logarithmic_mean(p12));
    // continuity across the switch thresholds
    CHECK(p_logarithmic_mean(p12, 1e-7) ==
          Catch::Approx(identric_mean(p12)).epsilon(1e-6));
    CHECK(p_logarithmic_mean(p12, -1.0 + 1e-7) ==
          Catch::Approx(logarithmic_mean(p12)).epsilon(1e-6));
    CHECK(p_logarithmic_mean(p12, -1e-7) ==
          Catch::Approx(identric_mean(p12)).epsilon(1e-6));
}

TEST_CASE("every mean is symmetric and idempotent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const positive_pair p = sample_pair(rng);
        const positive_pair q(p.hi(), p.lo());
        CHECK(arithmetic_mean(p) == arithmetic_mean(q));
        CHECK(geometric_mean(p) == geometric_mean(q));
        CHECK(harmonic_mean(p) == harmonic_mean(q));
        CHECK(logarithmic_mean(p) == logarithmic_mean(q));
        CHECK(identric_mean(p) == identric_mean(q));
        CHECK(p_logarithmic_mean(p, 2.5) == p_logarithmic_mean(q, 2.5));
    }
    positive_pair same(3.7, 3.7);
    CHECK(arithmetic_mean(same) == 3.7);
    CHECK(geometric_mean(same) == Catch::Approx(3.7).epsilon(1e-15));
    CHECK(harmonic_mean(same) == Catch::Approx(3.7).epsilon(1e-15));
    CHECK(logarithmic_mean(same) == 3.7);
    CHECK(identric_mean(same) == 3.7);
    CHECK(p_logarithmic_mean(same, 4.2) == 3.7);
}

TEST_CASE("mean chain H <= G <= L <= I <= A with betweenness") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const positive_pair p = sample_pair(rng);
        const double h = harmonic_mean(p);
        const double g = geometric_mean(p);
        const double l = logarithmic_mean(p);
        const double id = identric_mean(p);
        const double a = arithmetic_mean(p);
        const double tol = 1e-12;
        REQUIRE(g - h >= -tol * std::max(1.0, g));
        REQUIRE(l - g >= -tol * std::max(1.0, l));
        REQUIRE(id - l >= -tol * std::max(1.0, id));
        REQUIRE(a - id >= -tol * std::max(1.0, a));
        for (double m : {h, g, l, id, a}) {
            REQUIRE(m >= p.lo() * (1.0 - 1e-13));
            REQUIRE(m <= p.hi() * (1.0 + 1e-13));
        }
        // strict ordering for non-degenerate pairs
        if (p.hi() / p.lo() > 1.001) {
            REQUIRE(h < g);
            REQUIRE(g < l);
            REQUIRE(l < id);
            REQUIRE(id < a);
        }
    }
}

TEST_CASE("p-logarithmic mean is monotone in p") {
    std::mt19937_64 rng(99);
    const double ps[] = {-3.0, -2.0, -1.5, -1.0, -0.75, -0.5, -0.25, 0.0,
                         0.25, 0.5,  1.0,  1.5,  2.0,   3.0};
    for (int i = 0; i < 100; ++i) {
        const positive_pair p = sample_pair(rng);
        double prev = p_logarithmic_mean(p, ps[0]);
        for (std::size_t k = 1; k < std::size(ps); ++k) {
            const double cur = p_logarithmic_mean(p, ps[k]);
            REQUIRE(cur - prev >= -1e-11 * std::max(1.0, cur));
            prev = cur;
        }
    }
}

TEST_CASE("p-logarithmic mean survives extreme scales") {
    // b^b would overflow long before these do
    positive_pair wide(1e-3, 1e3);
    const double v = p_logarithmic_mean(wide, 3.0);
    CHECK(std::isfinite(v));
    CHECK(v >= wide.lo());
    CHECK(v <= wide.hi());
    CHECK(std::isfinite(identric_mean(wide)));
    CHECK(std::isfinite(p_logarithmic_mean(wide, -3.0)));
}
