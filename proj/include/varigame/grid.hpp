#pragma once
#include <cstddef>
#include <vector>

namespace varigame {

/// Uniform grid t_k = k / n_steps on [0, 1]. Nodes are computed as the
/// exact ratio so t_0 == 0 and t_n == 1 hold without accumulation error.
struct TimeGrid {
    std::size_t n_steps;

    explicit TimeGrid(std::size_t n);

    double dt() const { return 1.0 / static_cast<double>(n_steps); }
    std::size_t n_nodes() const { return n_steps + 1; }
    double node(std::size_t k) const {
        return static_cast<double>(k) / static_cast<double>(n_steps);
    }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// A strategy sampled on a TimeGrid. `deriv` is optional: integrators and
/// closed forms attach exact derivative samples, anything loaded from disk
/// usually has values only and falls back to finite differences.
struct SampledFn {
    TimeGrid grid{10000};
    std::vector<double> values;  // size grid.n_nodes()
    std::vector<double> deriv;   // empty, or same size as values

    bool has_deriv() const { return !deriv.empty(); }
};

enum class Quadrature { LeftRiemann, Trapezoid };

/// Finite-difference derivative on the same grid: central differences in
/// the interior, second-order one-sided stencils at the ends.
SampledFn derivative(const SampledFn& f);

double integrate(const SampledFn& f, Quadrature rule = Quadrature::Trapezoid);

/// Closed-form optimal strategy (a/4) t (2 - t) of the linearized game,
/// with its analytic derivative attached.
SampledFn small_a_optimum(double a, const TimeGrid& grid);

/// Boundary conditions f(0) = 0 and f'(1) = 0 within tol. Uses attached
/// derivative samples if present, else a one-sided difference at t = 1.
bool is_admissible(const SampledFn& f, double boundary_tol = 1e-6);

/// Max-norm distance between two functions on the same grid.
double linf_distance(const SampledFn& a, const SampledFn& b);

}  // namespace varigame
