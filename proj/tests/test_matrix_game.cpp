#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "varigame/matrix_game.hpp"

using namespace varigame;

namespace {

// 3x3 cyclic game with a known fully mixed equilibrium.
const std::vector<std::vector<double>> kCyclic = {
    {0.0, 34.994, -62.147},
    {-34.994, 0.0, 32.740},
    {62.147, -32.740, 0.0},
};

std::vector<std::vector<double>> random_antisymmetric(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = u(rng);
            m[j][i] = -m[i][j];
        }
    return m;
}

}  // namespace

TEST_CASE("known cyclic game: equilibrium, feasibility, cycle cross-check") {
    MixedStrategy sol = solve_symmetric_game(kCyclic);
    REQUIRE(sol.probabilities.size() == 3);
    CHECK(std::abs(sol.probabilities[0] - 0.252) <= 0.002);
    CHECK(std::abs(sol.probabilities[1] - 0.478) <= 0.002);
    CHECK(std::abs(sol.probabilities[2] - 0.269) <= 0.002);

    std::vector<double> mp = expected_payoffs(kCyclic, sol);
    for (double v : mp) CHECK(v <= 1e-8);

    auto cyc = cycle_equilibrium_3x3(kCyclic);
    REQUIRE(cyc.has_value());
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs((*cyc).probabilities[i] - sol.probabilities[i]) <= 1e-6);

    double total = 0.0;
    for (double p : sol.probabilities) {
        CHECK(p >= 0.0);
        total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-10);
}

TEST_CASE("uniform mixture payoffs on the cyclic game") {
    std::vector<double> mp = expected_payoffs(kCyclic, MixedStrategy{{1.0 / 3, 1.0 / 3, 1.0 / 3}});
    CHECK(std::abs(mp[0] - (-9.051)) <= 1e-3);
    CHECK(std::abs(mp[1] - (-0.751)) <= 1e-3);
    CHECK(std::abs(mp[2] - 9.802) <= 1e-3);
}

TEST_CASE("rock-paper-scissors mixes uniformly") {
    std::vector<std::vector<double>> rps = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    MixedStrategy sol = solve_symmetric_game(rps);
    for (double p : sol.probabilities) CHECK(std::abs(p - 1.0 / 3) <= 1e-9);

    auto cyc = cycle_equilibrium_3x3(rps);
    REQUIRE(cyc.has_value());
    for (double p : cyc->probabilities) CHECK(std::abs(p - 1.0 / 3) <= 1e-12);
}

TEST_CASE("degenerate games") {
    std::vector<std::vector<double>> trivial = {{0.0}};
    MixedStrategy one = solve_symmetric_game(trivial);
    REQUIRE(one.probabilities.size() == 1);
    CHECK(one.probabilities[0] == 1.0);

    // Strategy 0 dominates: playing it always wins 1 against strategy 1.
    std::vector<std::vector<double>> dominant = {{0.0, 1.0}, {-1.0, 0.0}};
    MixedStrategy dom = solve_symmetric_game(dominant);
    CHECK(dom.probabilities[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dom.probabilities[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("input validation") {
    using Entries = std::vector<std::vector<double>>;
    CHECK_THROWS_AS(solve_symmetric_game(Entries{}), std::invalid_argument);
    CHECK_THROWS_AS(solve_symmetric_game(Entries{{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_symmetric_game(Entries{{0.0, 1.0}, {1.0, 0.0}}), std::invalid_argument);
    double nan = std::nan("");
    CHECK_THROWS_AS(solve_symmetric_game(Entries{{0.0, nan}, {-nan, 0.0}}), std::invalid_argument);
}

TEST_CASE("complementary slackness on random antisymmetric games") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::size_t> size_dist(2, 8);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = size_dist(rng);
        auto m = random_antisymmetric(n, rng);
        MixedStrategy sol = solve_symmetric_game(m);
        std::vector<double> mp = expected_payoffs(m, sol);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(mp[i] <= 1e-6);
            CHECK(sol.probabilities[i] >= 0.0);
            total += sol.probabilities[i];
            if (sol.probabilities[i] > 0.0) CHECK(std::abs(mp[i]) <= 1e-6);
        }
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("equilibrium is equivariant under relabeling") {
    MixedStrategy base = solve_symmetric_game(kCyclic);
    std::vector<std::size_t> perm = {2, 0, 1};
    std::vector<std::vector<double>> shuffled(3, std::vector<double>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) shuffled[i][j] = kCyclic[perm[i]][perm[j]];
    MixedStrategy moved = solve_symmetric_game(shuffled);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(moved.probabilities[i] - base.probabilities[perm[i]]) <= 1e-9);
}

TEST_CASE("cycle closed form declines games without a cycle") {
    // Upper off-diagonal signs (+,+,+) make the sign pattern non-cyclic.
    std::vector<std::vector<double>> m = {{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}};
    CHECK(!cycle_equilibrium_3x3(m).has_value());
    CHECK(!cycle_equilibrium_3x3({{0.0, 1.0}, {-1.0, 0.0}}).has_value());
}
