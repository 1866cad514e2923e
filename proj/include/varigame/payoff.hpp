#pragma once
#include <vector>

#include "varigame/grid.hpp"
#include "varigame/kernel.hpp"

namespace varigame {

/// Shared knobs for evaluating the game functional
///   S(f, g) = integral_0^1 [ f'(t)^2 - g'(t)^2 - a * phi(f(t) - g(t)) ] dt.
struct GameConfig {
    double a = 1.0;
    OddKernel kernel = OddKernel::builtin("sin");
    TimeGrid grid{10000};
    Quadrature quadrature = Quadrature::Trapezoid;
    double boundary_tol = 1e-6;
};

/// S(f, g) for admissible f, g sampled on cfg.grid. Attached derivative
/// samples are used when present; otherwise finite differences.
double payoff(const SampledFn& f, const SampledFn& g, const GameConfig& cfg);

/// Pairwise payoffs of a finite strategy set. Orientation matches the
/// matrix-game solver: entries[i][j] = S(strategies[j], strategies[i]),
/// i.e. row i is the opponent's choice and column j is ours.
struct PayoffMatrix {
    std::vector<SampledFn> strategies;
    std::vector<std::vector<double>> entries;

    std::size_t size() const { return entries.size(); }
};

/// Builds the matrix from the n(n-1)/2 upper-triangle payoffs and mirrors
/// them with a sign flip, which antisymmetrizes away quadrature noise and
/// pins the diagonal to exact zero. Entries are evaluated concurrently.
PayoffMatrix payoff_matrix(const std::vector<SampledFn>& strategies,
                           const GameConfig& cfg);

}  // namespace varigame
