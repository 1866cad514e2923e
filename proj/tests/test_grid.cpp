#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "test_helpers.hpp"
#include "varigame/grid.hpp"

using namespace varigame;

TEST_CASE("TimeGrid endpoints and spacing") {
    TimeGrid g(10000);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(10000) == 1.0);
    CHECK(g.n_nodes() == 10001);
    CHECK(static_cast<double>(g.n_steps) * g.dt() == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t k : {0u, 17u, 9999u}) CHECK(g.node(k) < g.node(k + 1));
    CHECK_THROWS_AS(TimeGrid(0), std::invalid_argument);
}

TEST_CASE("derivative is exact for linear and quadratic samples") {
    TimeGrid g(1000);
    SampledFn lin = testhelp::sample(g, [](double t) { return t; });
    SampledFn dlin = derivative(lin);
    for (std::size_t k = 0; k < g.n_nodes(); k += 97)
        CHECK(std::abs(dlin.values[k] - 1.0) <= 1e-10);

    SampledFn quad = testhelp::sample(g, [](double t) { return t * t; });
    SampledFn dquad = derivative(quad);
    CHECK(dquad.values[500] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(dquad.values[0]) <= 1e-9);            // one-sided stencil, exact on quadratics
    CHECK(std::abs(dquad.values[1000] - 2.0) <= 1e-9);
}

TEST_CASE("derivative needs at least 3 nodes") {
    TimeGrid tiny(1);
    SampledFn f;
    f.grid = tiny;
    f.values = {0.0, 1.0};
    CHECK_THROWS_AS(derivative(f), std::invalid_argument);
}

TEST_CASE("derivative of the closed-form optimum vanishes at t = 1") {
    TimeGrid g(10000);
    for (double a : {0.5, 1.0, 5.0, 50.0}) {
        SampledFn f = small_a_optimum(a, g);
        f.deriv.clear();  // force the finite-difference route
        CHECK(std::abs(derivative(f).values.back()) <= 1e-8);
    }
}

TEST_CASE("integrate: exact cases and convergence") {
    TimeGrid g10(10);
    SampledFn one = testhelp::sample(g10, [](double) { return 1.0; });
    CHECK(integrate(one, Quadrature::Trapezoid) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(integrate(one, Quadrature::LeftRiemann) == doctest::Approx(1.0).epsilon(1e-15));

    SampledFn ramp = testhelp::sample(g10, [](double t) { return t; });
    CHECK(integrate(ramp, Quadrature::Trapezoid) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(integrate(ramp, Quadrature::LeftRiemann) == doctest::Approx(0.45).epsilon(1e-15));

    TimeGrid g1000(1000);
    SampledFn quad = testhelp::sample(g1000, [](double t) { return t * t; });
    CHECK(std::abs(integrate(quad, Quadrature::Trapezoid) - 1.0 / 3.0) <= 1e-6);

    TimeGrid g1e4(10000);
    SampledFn sine = testhelp::sample(g1e4, [](double t) { return std::sin(std::numbers::pi * t); });
    CHECK(std::abs(integrate(sine, Quadrature::Trapezoid) - 2.0 / std::numbers::pi) <= 1e-6);
}

TEST_CASE("integrate is linear") {
    TimeGrid g(1000);
    std::mt19937_64 rng(7);
    SampledFn f = testhelp::random_admissible(g, rng);
    SampledFn h = testhelp::random_admissible(g, rng);
    const double alpha = 0.7, beta = -1.3;
    SampledFn combo;
    combo.grid = g;
    combo.values.resize(g.n_nodes());
    for (std::size_t k = 0; k < g.n_nodes(); ++k)
        combo.values[k] = alpha * f.values[k] + beta * h.values[k];
    for (Quadrature rule : {Quadrature::Trapezoid, Quadrature::LeftRiemann}) {
        double lhs = integrate(combo, rule);
        double rhs = alpha * integrate(f, rule) + beta * integrate(h, rule);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("integrate rejects non-finite samples") {
    TimeGrid g(10);
    SampledFn f = testhelp::sample(g, [](double) { return 1.0; });
    f.values[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(integrate(f, Quadrature::Trapezoid), std::invalid_argument);
}

TEST_CASE("small_a_optimum closed form") {
    TimeGrid g(1000);
    CHECK(small_a_optimum(4.0, g).values.back() == 1.0);
    CHECK(small_a_optimum(2.0, g).values[500] == doctest::Approx(0.375).epsilon(1e-15));
    SampledFn zero = small_a_optimum(0.0, g);
    for (double v : zero.values) CHECK(v == 0.0);
    CHECK_THROWS_AS(small_a_optimum(-1.0, g), std::domain_error);
    CHECK(is_admissible(small_a_optimum(7.0, g)));
}

TEST_CASE("is_admissible checks both boundary conditions") {
    TimeGrid g(1000);
    CHECK(is_admissible(small_a_optimum(3.0, g)));
    SampledFn ramp = testhelp::sample(g, [](double t) { return t; });
    CHECK_FALSE(is_admissible(ramp));  // f'(1) = 1
    SampledFn shifted = testhelp::sample(g, [](double t) { return 0.1 + 0.0 * t; });
    CHECK_FALSE(is_admissible(shifted));  // f(0) = 0.1
}

TEST_CASE("linf_distance demands a shared grid") {
    TimeGrid g(100), h(200);
    SampledFn a = testhelp::sample(g, [](double t) { return t; });
    SampledFn b = testhelp::sample(g, [](double t) { return t + 0.25; });
    CHECK(linf_distance(a, b) == doctest::Approx(0.25).epsilon(1e-15));
    SampledFn c = testhelp::sample(h, [](double t) { return t; });
    CHECK_THROWS_AS(linf_distance(a, c), std::invalid_argument);
}
