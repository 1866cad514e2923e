#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "varigame/kernel.hpp"

using varigame::OddKernel;

TEST_CASE("builtin kernels hit their anchor values") {
    CHECK(OddKernel::builtin("sin").value(std::numbers::pi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(OddKernel::builtin("sin3").derivative(0.0) == 0.0);
    CHECK(OddKernel::builtin("arctan").derivative(1.0) == 0.5);
    CHECK(OddKernel::builtin("sin").value(0.0) == 0.0);
    CHECK(OddKernel::builtin("sin3").value(0.0) == 0.0);
    CHECK(OddKernel::builtin("arctan").value(0.0) == 0.0);
}

TEST_CASE("unknown kernel name is rejected") {
    CHECK_THROWS_AS(OddKernel::builtin("cos"), std::invalid_argument);
    CHECK_THROWS_AS(OddKernel::builtin(""), std::invalid_argument);
}

TEST_CASE("oddness holds to 1e-12 on 1000 random points in [-20, 20]") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> box(-20.0, 20.0);
    for (const char* name : {"sin", "sin3", "arctan"}) {
        OddKernel k = OddKernel::builtin(name);
        for (int i = 0; i < 1000; ++i) {
            double x = box(rng);
            CHECK(std::abs(k.value(-x) + k.value(x)) <= 1e-12);
        }
    }
}

TEST_CASE("analytic derivative matches central differences to 1e-6 on [-10, 10]") {
    const double h = 1e-5;
    for (const char* name : {"sin", "sin3", "arctan"}) {
        OddKernel k = OddKernel::builtin(name);
        for (int i = 0; i <= 2000; ++i) {
            double x = -10.0 + 20.0 * i / 2000.0;
            double fd = (k.value(x + h) - k.value(x - h)) / (2.0 * h);
            CHECK(std::abs(k.derivative(x) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("custom odd polynomial evaluates and differentiates") {
    OddKernel cubic = OddKernel::odd_polynomial({0.0, 0.0, 0.0, 1.0});  // x^3
    CHECK(cubic.value(2.0) == 8.0);
    CHECK(cubic.derivative(2.0) == 12.0);
    CHECK(cubic.value(-2.0) == -8.0);
    CHECK(cubic.value(0.0) == 0.0);

    OddKernel linear = OddKernel::odd_polynomial({0.0, 1.0});  // x, the linearized game
    CHECK(linear.value(0.37) == 0.37);
    CHECK(linear.derivative(-5.0) == 1.0);
}

TEST_CASE("even powers in a custom kernel are rejected") {
    CHECK_THROWS_AS(OddKernel::odd_polynomial({0.0, 1.0, 0.5}), std::invalid_argument);  // x^2
    CHECK_THROWS_AS(OddKernel::odd_polynomial({1.0}), std::invalid_argument);            // constant
    CHECK_NOTHROW(OddKernel::odd_polynomial({0.0, -2.0, 0.0, 3.0}));
}
