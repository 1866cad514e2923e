#include "varigame/double_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace varigame {

std::vector<SampledFn> cluster_functions(const std::vector<SampledFn>& candidates,
                                         double tol) {
    std::vector<SampledFn> kept;
    for (const auto& cand : candidates) {
        bool duplicate = false;
        for (const auto& have : kept) {
            if (linf_distance(cand, have) <= tol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) kept.push_back(cand);
    }
    return kept;
}

SampledFn quadratic_strategy(double c, const TimeGrid& grid) {
    SampledFn f;
    f.grid = grid;
    f.values.resize(grid.n_nodes());
    f.deriv.resize(grid.n_nodes());
    for (std::size_t k = 0; k < grid.n_nodes(); ++k) {
        double t = grid.node(k);
        f.values[k] = c * t * (2.0 - t);
        f.deriv[k] = 2.0 * c * (1.0 - t);
    }
    return f;
}

std::vector<SampledFn> default_seeds(const GameConfig& cfg) {
    const double pi = std::numbers::pi;
    std::vector<SampledFn> seeds;
    for (double c : {0.0, 0.25 * cfg.a, -0.25 * cfg.a, pi, -pi, 2.0 * pi})
        seeds.push_back(quadratic_strategy(c, cfg.grid));
    return seeds;
}

EquilibriumReport find_equilibrium(const GameConfig& cfg,
                                   const std::vector<SampledFn>& seeds,
                                   double threshold, std::size_t max_iter,
                                   const OracleOptions& opts) {
    if (seeds.empty()) throw std::invalid_argument("find_equilibrium: no seeds");
    if (!(threshold > 0.0))
        throw std::invalid_argument("find_equilibrium: threshold must be > 0");
    if (max_iter == 0)
        throw std::invalid_argument("find_equilibrium: max_iter must be >= 1");
    for (const auto& s : seeds)
        if (!is_admissible(s, cfg.boundary_tol))
            throw std::invalid_argument("find_equilibrium: seed violates the boundary conditions");

    EquilibriumReport report;
    report.a = cfg.a;
    report.kernel_name = cfg.kernel.name();
    report.dt = cfg.grid.dt();
    report.threshold = threshold;

    std::vector<SampledFn> set = cluster_functions(seeds, opts.cluster_tol);

    // Reporting view of an LP solution over the pool. The LP over a converged
    // pool is degenerate: best responses from different iterations land a few
    // 1e-3 apart on the same equilibrium branch, tie in payoff, and the
    // solver smears one branch's mass across several of them. Equilibrium
    // branches themselves sit far apart, so grouping positive-probability
    // atoms by single-linkage within support_cluster_tol recovers one
    // reported strategy per branch. Each group's representative is its
    // probability-weighted mean trajectory (admissible, since the boundary
    // conditions are linear), which preserves the group's aggregate effect
    // on opponents to first order.
    auto fill_solution = [&](const MixedStrategy& p) {
        std::vector<std::size_t> atoms;
        for (std::size_t i = 0; i < set.size(); ++i)
            if (p.probabilities[i] > 0.0) atoms.push_back(i);

        std::vector<int> group(atoms.size(), -1);
        int n_groups = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (group[i] >= 0) continue;
            group[i] = n_groups++;
            // Grow the group transitively (single linkage).
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t j = 0; j < atoms.size(); ++j) {
                    if (group[j] >= 0) continue;
                    for (std::size_t k = 0; k < atoms.size(); ++k) {
                        if (group[k] != group[i]) continue;
                        if (linf_distance(set[atoms[j]], set[atoms[k]]) <=
                            opts.support_cluster_tol) {
                            group[j] = group[i];
                            grew = true;
                            break;
                        }
                    }
                }
            }
        }

        report.support.assign(static_cast<std::size_t>(n_groups), SampledFn{});
        report.probabilities.probabilities.assign(static_cast<std::size_t>(n_groups), 0.0);
        for (int g = 0; g < n_groups; ++g) {
            SampledFn mean;
            mean.grid = cfg.grid;
            mean.values.assign(cfg.grid.n_nodes(), 0.0);
            mean.deriv.assign(cfg.grid.n_nodes(), 0.0);
            double mass = 0.0;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (group[i] != g) continue;
                double w = p.probabilities[atoms[i]];
                mass += w;
                const SampledFn& f = set[atoms[i]];
                for (std::size_t k = 0; k < mean.values.size(); ++k) {
                    mean.values[k] += w * f.values[k];
                    mean.deriv[k] += w * f.deriv[k];
                }
            }
            for (std::size_t k = 0; k < mean.values.size(); ++k) {
                mean.values[k] /= mass;
                mean.deriv[k] /= mass;
            }
            report.support[static_cast<std::size_t>(g)] = std::move(mean);
            report.probabilities.probabilities[static_cast<std::size_t>(g)] = mass;
        }
    };

    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        report.iterations = iter;
        try {
            PayoffMatrix matrix = payoff_matrix(set, cfg);
            MixedStrategy p = solve_symmetric_game(matrix);
            fill_solution(p);

            // The loop's mixture is the raw LP solution over the pool, not
            // the grouped report view: the margin certificate below belongs
            // to the exact LP equilibrium.
            MixtureTarget mixture;
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (p.probabilities[i] > 0.0) {
                    mixture.components.push_back(set[i]);
                    mixture.weights.push_back(p.probabilities[i]);
                }
            }

            auto [response, margin] = best_response(mixture, cfg, opts.shoot);
            report.improvement_history.push_back(margin);
            if (margin >= -threshold) {
                report.converged = true;
                return report;
            }

            // Fold the improving response into the pool: within the cluster
            // radius of an existing strategy it supersedes that entry (it is
            // a fresher estimate of the same branch optimum), otherwise it
            // joins as a new branch.
            std::size_t nearest = 0;
            double nearest_d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < set.size(); ++i) {
                double d = linf_distance(response, set[i]);
                if (d < nearest_d) {
                    nearest_d = d;
                    nearest = i;
                }
            }
            if (nearest_d <= opts.cluster_tol)
                set[nearest] = std::move(response);
            else
                set.push_back(std::move(response));
        } catch (const std::exception& e) {
            throw std::runtime_error("find_equilibrium: iteration " + std::to_string(iter) +
                                     " failed: " + e.what());
        }
    }
    report.converged = false;
    return report;
}

}  // namespace varigame
