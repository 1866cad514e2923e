#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "varigame/payoff.hpp"

namespace varigame {

struct MixedStrategy {
    std::vector<double> probabilities;  // sums to 1, entries >= 0

    /// Indices with strictly positive probability.
    std::vector<std::size_t> support() const;
};

/// Optimal mixture of a symmetric (antisymmetric-matrix) zero-sum game.
/// entries[i][j] is the payoff to the column player when the row player
/// picks i and the column player picks j; a matrix that is not
/// antisymmetric within 1e-9 is rejected. Probabilities below 1e-6 are
/// truncated to zero and the rest renormalized, and the returned mixture
/// p satisfies entries * p <= 1e-8 componentwise (value of such a game
/// is exactly zero).
MixedStrategy solve_symmetric_game(const std::vector<std::vector<double>>& entries);
MixedStrategy solve_symmetric_game(const PayoffMatrix& m);

/// entries * p: payoff of each pure row strategy against the mixture.
std::vector<double> expected_payoffs(const std::vector<std::vector<double>>& entries,
                                     const MixedStrategy& p);

/// Closed form for a 3x3 antisymmetric game whose equilibrium is fully
/// mixed: p is proportional to (entries[1][2], -entries[0][2],
/// entries[0][1]). Returns nullopt when that vector changes sign, i.e.
/// when no fully mixed equilibrium exists. Used as an independent
/// cross-check of the LP route, so it deliberately shares no code with it.
std::optional<MixedStrategy> cycle_equilibrium_3x3(
    const std::vector<std::vector<double>>& entries);

}  // namespace varigame
