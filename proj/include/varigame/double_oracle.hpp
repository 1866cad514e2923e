#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "varigame/matrix_game.hpp"
#include "varigame/shooting.hpp"

namespace varigame {

/// Result of the best-response iteration. `support` and `probabilities`
/// cover exactly the positive-probability strategies; improvement_history
/// records the best-response margin of each iteration (margin < 0 means
/// some function still beats the current mixture).
struct EquilibriumReport {
    std::vector<SampledFn> support;
    MixedStrategy probabilities;
    std::size_t iterations = 0;
    std::vector<double> improvement_history;
    bool converged = false;

    // effective configuration, echoed for reproducibility
    double a = 0.0;
    std::string kernel_name;
    double dt = 0.0;
    double threshold = 0.0;
};

/// Knobs beyond the (threshold, max_iter) pair.
struct OracleOptions {
    // L-inf radius within which a new best response supersedes an existing
    // pool strategy rather than joining it as a near-duplicate.
    double cluster_tol = 1e-3;
    // L-inf radius for grouping positive-probability pool atoms into one
    // reported support strategy. The converged LP is degenerate and may smear
    // one branch's mass across near-copies up to a few 1e-2 apart; distinct
    // branches sit at L-inf distances of 0.5 and more.
    double support_cluster_tol = 5e-2;
    ShootParams shoot;
};

/// Greedy dedupe: keeps a candidate only if its L-inf distance to every
/// already-kept function exceeds tol. Input order is preserved.
std::vector<SampledFn> cluster_functions(const std::vector<SampledFn>& candidates,
                                         double tol = 1e-3);

/// The quadratic c*t*(2-t), admissible for any c, with analytic derivative.
SampledFn quadratic_strategy(double c, const TimeGrid& grid);

/// Six deterministic seed quadratics with c in {0, a/4, -a/4, pi, -pi, 2*pi}.
std::vector<SampledFn> default_seeds(const GameConfig& cfg);

/// Grow-and-solve loop: build the payoff matrix over the current strategy
/// set, solve the matrix game, shoot a best response against the mixture;
/// if it improves by more than the threshold, add it (deduplicated) and
/// repeat, else report convergence. Hitting max_iter or a stalled dedupe
/// returns converged = false rather than throwing.
EquilibriumReport find_equilibrium(const GameConfig& cfg,
                                   const std::vector<SampledFn>& seeds,
                                   double threshold = 1e-5,
                                   std::size_t max_iter = 50,
                                   const OracleOptions& opts = {});

}  // namespace varigame
