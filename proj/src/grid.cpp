#include "varigame/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace varigame {

TimeGrid::TimeGrid(std::size_t n) : n_steps(n) {
    if (n == 0) throw std::invalid_argument("TimeGrid needs at least one step");
}

namespace {

void check_sampled(const SampledFn& f, const char* who) {
    if (f.values.size() != f.grid.n_nodes())
        throw std::invalid_argument(std::string(who) + ": values size " +
                                    std::to_string(f.values.size()) + " != n_nodes " +
                                    std::to_string(f.grid.n_nodes()));
    if (!f.deriv.empty() && f.deriv.size() != f.values.size())
        throw std::invalid_argument(std::string(who) + ": deriv size mismatch");
}

}  // namespace

SampledFn derivative(const SampledFn& f) {
    check_sampled(f, "derivative");
    std::size_t n = f.values.size();
    if (n < 3)
        throw std::invalid_argument("derivative needs at least 3 nodes, got " +
                                    std::to_string(n));
    double h = f.grid.dt();
    SampledFn out;
    out.grid = f.grid;
    out.values.resize(n);
    const auto& v = f.values;
    out.values[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (std::size_t k = 1; k + 1 < n; ++k)
        out.values[k] = (v[k + 1] - v[k - 1]) / (2.0 * h);
    out.values[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    return out;
}

double integrate(const SampledFn& f, Quadrature rule) {
    check_sampled(f, "integrate");
    for (double v : f.values)
        if (!std::isfinite(v))
            throw std::invalid_argument("integrate: non-finite sample value");
    // Long-double accumulation: with 1e5+ nodes the double partial sums
    // would otherwise eat into the tight quadrature tolerances.
    long double acc = 0.0L;
    std::size_t n = f.grid.n_steps;
    if (rule == Quadrature::LeftRiemann) {
        for (std::size_t k = 0; k < n; ++k) acc += f.values[k];
    } else {
        acc = 0.5L * (static_cast<long double>(f.values[0]) +
                      static_cast<long double>(f.values[n]));
        for (std::size_t k = 1; k < n; ++k) acc += f.values[k];
    }
    return static_cast<double>(acc * static_cast<long double>(f.grid.dt()));
}

SampledFn small_a_optimum(double a, const TimeGrid& grid) {
    if (!(a >= 0.0)) throw std::domain_error("small_a_optimum: a must be >= 0");
    SampledFn out;
    out.grid = grid;
    out.values.resize(grid.n_nodes());
    out.deriv.resize(grid.n_nodes());
    for (std::size_t k = 0; k < grid.n_nodes(); ++k) {
        double t = grid.node(k);
        out.values[k] = 0.25 * a * t * (2.0 - t);
        out.deriv[k] = 0.5 * a * (1.0 - t);
    }
    return out;
}

bool is_admissible(const SampledFn& f, double boundary_tol) {
    check_sampled(f, "is_admissible");
    if (f.values.size() < 3) return false;
    if (std::abs(f.values.front()) > boundary_tol) return false;
    double fp1;
    if (f.has_deriv()) {
        fp1 = f.deriv.back();
    } else {
        std::size_t n = f.values.size();
        double h = f.grid.dt();
        fp1 = (3.0 * f.values[n - 1] - 4.0 * f.values[n - 2] + f.values[n - 3]) / (2.0 * h);
    }
    return std::abs(fp1) <= boundary_tol;
}

double linf_distance(const SampledFn& a, const SampledFn& b) {
    check_sampled(a, "linf_distance");
    check_sampled(b, "linf_distance");
    if (!(a.grid == b.grid))
        throw std::invalid_argument("linf_distance: functions live on different grids");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
    return worst;
}

}  // namespace varigame
