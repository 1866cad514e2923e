#pragma once
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "varigame/payoff.hpp"

namespace varigame {

enum class IntegrationMethod { Euler, Rk4 };

/// Opponent mixture the best-response ODE is solved against. Weights are
/// nonnegative and sum to one; components share one grid.
struct MixtureTarget {
    std::vector<double> weights;
    std::vector<SampledFn> components;

    static MixtureTarget pure(SampledFn g);
    void validate(const TimeGrid& grid) const;
};

/// One backward shot: the candidate terminal value c = f(1), the full
/// trajectory (with integrator derivative samples attached), and the
/// residual f(0) that shooting drives to zero. `tangential` marks roots
/// recovered from a local minimum of |residual| that barely crosses or
/// touches zero, where the bracketing is less certain.
struct ShotResult {
    double terminal_value = 0.0;
    SampledFn trajectory;
    double residual = 0.0;
    bool tangential = false;
};

struct CRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Scan/refine controls. An unset c_range falls back to the a-dependent
/// default [-(2*pi + a/4), 2*pi + a/4] clipped to [-4*pi, 4*pi].
struct ShootParams {
    std::optional<CRange> c_range;
    std::size_t n_scan = 2001;
    IntegrationMethod method = IntegrationMethod::Rk4;

    CRange resolved_c_range(double a) const;
};

/// Integrates f'' = -(a/2) sum_k w_k phi'(f - g_k) backward from
/// f(1) = c, f'(1) = 0 down to t = 0. Internally this runs forward in
/// tau = 1 - t with state u(tau) = f(1 - tau), v = du/dtau = -f'(1 - tau),
/// so u(0) = c, v(0) = 0 and the residual is u(1) = f(0). Every caller in
/// this library relies on that orientation. Throws on divergence.
ShotResult integrate_backward(double c, const MixtureTarget& mixture,
                              const GameConfig& cfg,
                              IntegrationMethod method = IntegrationMethod::Rk4);

/// All residual roots in c_range: a uniform scan of n_scan points, sign
/// changes refined by bisection to |residual| <= 1e-9 (continuing down to
/// machine interval width for steep roots near unstable equilibria), plus
/// a local-minimum pass that recovers pairs of nearly tangential crossings
/// a plain sign scan would miss. Sorted by c.
std::vector<ShotResult> scan_roots(const MixtureTarget& mixture, const GameConfig& cfg,
                                   const ShootParams& params);

/// Best response against the mixture: the admissible root trajectory
/// minimizing the expected payoff sum_k w_k S(f, g_k), returned with that
/// value. Throws (suggesting a wider c range) when no root qualifies.
std::pair<SampledFn, double> best_response(const MixtureTarget& mixture,
                                           const GameConfig& cfg,
                                           const ShootParams& params);

/// Residual portrait against g = 0: (c, f(0), f'(0)) per candidate, with
/// a divergence flag instead of an exception so one bad c cannot sink a
/// whole plot.
struct PhasePoint {
    double c = 0.0;
    double f0 = 0.0;
    double fprime0 = 0.0;
    bool divergent = false;
};

std::vector<PhasePoint> phase_portrait(const GameConfig& cfg,
                                       const std::vector<double>& c_values,
                                       IntegrationMethod method = IntegrationMethod::Rk4);

}  // namespace varigame
