#include "varigame/payoff.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "varigame/parallel.hpp"

namespace varigame {

double payoff(const SampledFn& f, const SampledFn& g, const GameConfig& cfg) {
    if (!(cfg.a >= 0.0))
        throw std::domain_error("payoff: a must be >= 0, got " + std::to_string(cfg.a));
    if (!(f.grid == cfg.grid) || !(g.grid == cfg.grid))
        throw std::invalid_argument("payoff: strategies must be sampled on the configured grid");
    if (!is_admissible(f, cfg.boundary_tol))
        throw std::invalid_argument("payoff: f violates f(0) = 0 or f'(1) = 0");
    if (!is_admissible(g, cfg.boundary_tol))
        throw std::invalid_argument("payoff: g violates g(0) = 0 or g'(1) = 0");

    SampledFn fd_f, fd_g;  // keep finite-difference fallbacks alive
    const std::vector<double>* fp = &f.deriv;
    const std::vector<double>* gp = &g.deriv;
    if (!f.has_deriv()) {
        fd_f = derivative(f);
        fp = &fd_f.values;
    }
    if (!g.has_deriv()) {
        fd_g = derivative(g);
        gp = &fd_g.values;
    }

    SampledFn integrand;
    integrand.grid = cfg.grid;
    integrand.values.resize(cfg.grid.n_nodes());
    for (std::size_t k = 0; k < cfg.grid.n_nodes(); ++k) {
        double dfp = (*fp)[k];
        double dgp = (*gp)[k];
        integrand.values[k] =
            dfp * dfp - dgp * dgp - cfg.a * cfg.kernel.value(f.values[k] - g.values[k]);
    }
    return integrate(integrand, cfg.quadrature);
}

PayoffMatrix payoff_matrix(const std::vector<SampledFn>& strategies, const GameConfig& cfg) {
    if (strategies.empty())
        throw std::invalid_argument("payoff_matrix: strategy list is empty");
    std::size_t n = strategies.size();

    PayoffMatrix m;
    m.strategies = strategies;
    m.entries.assign(n, std::vector<double>(n, 0.0));

    // Flatten the upper triangle so independent entries can run in parallel.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    parallel_for(pairs.size(), [&](std::size_t k) {
        auto [i, j] = pairs[k];
        double s = payoff(strategies[j], strategies[i], cfg);
        m.entries[i][j] = s;
        m.entries[j][i] = -s;
    });
    return m;
}

}  // namespace varigame
