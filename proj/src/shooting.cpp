#include "varigame/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "varigame/parallel.hpp"

namespace varigame {

namespace {

constexpr double kResidualTol = 1e-9;  // bisection residual target
constexpr double kDipTrigger = 0.1;     // |residual| below which a local min is probed
constexpr double kTangentTol = 1e-4;    // dip peak within this of zero = double root
constexpr double kRootDedupe = 1e-8;    // roots closer than this in c are one root

/// Right-hand side acceleration -(a/2) sum_k w_k phi'(u - g_k(t)), with the
/// opponent mixture baked into per-point tables. Points are indexed at
/// half-step resolution in integration (tau = 1 - t) order: point p sits at
/// tau = p * dt / 2, so a step j uses p = 2j, 2j+1, 2j+2.
///
/// For the trig kernels the angle-difference expansion moves every
/// per-component term into the tables: sin needs sum_k w_k cos(g_k) and
/// sum_k w_k sin(g_k); sin^3 (via phi' = 3cos(x) - 3cos^3(x)) additionally
/// needs the third-power combinations. That makes the per-step cost
/// independent of the mixture size, which is what keeps full sweeps
/// affordable.
class MixtureRhs {
public:
    MixtureRhs(const MixtureTarget& mixture, const GameConfig& cfg) {
        half_a_ = 0.5 * cfg.a;
        kernel_ = cfg.kernel;
        std::size_t n = cfg.grid.n_steps;
        std::size_t pts = 2 * n + 1;

        // Opponent mixture values at nodes and step midpoints, tau order.
        // Midpoints are linear interpolants; their O(dt^2) error is far
        // below the integrator tolerances this library promises.
        auto g_at = [&](const std::vector<double>& g, std::size_t p) {
            if (p % 2 == 0) return g[n - p / 2];
            std::size_t hi = n - (p - 1) / 2;  // t-node above the midpoint
            return 0.5 * (g[hi] + g[hi - 1]);
        };

        const auto& w = mixture.weights;
        std::size_t kcount = w.size();
        switch (kernel_.kind()) {
            case OddKernel::Kind::Sin: {
                c_.assign(pts, 0.0);
                s_.assign(pts, 0.0);
                for (std::size_t p = 0; p < pts; ++p) {
                    double cs = 0.0, sn = 0.0;
                    for (std::size_t k = 0; k < kcount; ++k) {
                        double gv = g_at(mixture.components[k].values, p);
                        cs += w[k] * std::cos(gv);
                        sn += w[k] * std::sin(gv);
                    }
                    c_[p] = cs;
                    s_[p] = sn;
                }
                break;
            }
            case OddKernel::Kind::Sin3: {
                c_.assign(pts, 0.0);
                s_.assign(pts, 0.0);
                c3_.assign(pts, 0.0);
                c2s_.assign(pts, 0.0);
                cs2_.assign(pts, 0.0);
                s3_.assign(pts, 0.0);
                for (std::size_t p = 0; p < pts; ++p) {
                    double cs = 0.0, sn = 0.0, c3 = 0.0, c2s = 0.0, cs2 = 0.0, s3 = 0.0;
                    for (std::size_t k = 0; k < kcount; ++k) {
                        double gv = g_at(mixture.components[k].values, p);
                        double cg = std::cos(gv), sg = std::sin(gv);
                        cs += w[k] * cg;
                        sn += w[k] * sg;
                        c3 += w[k] * cg * cg * cg;
                        c2s += w[k] * cg * cg * sg;
                        cs2 += w[k] * cg * sg * sg;
                        s3 += w[k] * sg * sg * sg;
                    }
                    c_[p] = cs;
                    s_[p] = sn;
                    c3_[p] = c3;
                    c2s_[p] = c2s;
                    cs2_[p] = cs2;
                    s3_[p] = s3;
                }
                break;
            }
            case OddKernel::Kind::Arctan:
            case OddKernel::Kind::OddPoly: {
                weights_ = w;
                g_tau_.assign(kcount, std::vector<double>(pts));
                for (std::size_t k = 0; k < kcount; ++k)
                    for (std::size_t p = 0; p < pts; ++p)
                        g_tau_[k][p] = g_at(mixture.components[k].values, p);
                break;
            }
        }
    }

    double accel(double u, std::size_t p) const {
        switch (kernel_.kind()) {
            case OddKernel::Kind::Sin: {
                double su = std::sin(u);
                double cu = std::cos(u);
                // cos(u - g) = cos(u)cos(g) + sin(u)sin(g), summed over the mixture
                return -half_a_ * (cu * c_[p] + su * s_[p]);
            }
            case OddKernel::Kind::Sin3: {
                double su = std::sin(u);
                double cu = std::cos(u);
                double lin = cu * c_[p] + su * s_[p];
                double cup = cu * cu, sup = su * su;
                double cube = cu * cup * c3_[p] + 3.0 * cup * su * c2s_[p] +
                              3.0 * cu * sup * cs2_[p] + su * sup * s3_[p];
                return -half_a_ * 3.0 * (lin - cube);
            }
            default: {
                double acc = 0.0;
                for (std::size_t k = 0; k < weights_.size(); ++k)
                    acc += weights_[k] * kernel_.derivative(u - g_tau_[k][p]);
                return -half_a_ * acc;
            }
        }
    }

private:
    double half_a_ = 0.0;
    OddKernel kernel_ = OddKernel::builtin("sin");
    std::vector<double> c_, s_;                  // trig kernels
    std::vector<double> c3_, c2s_, cs2_, s3_;    // sin3 only
    std::vector<double> weights_;                // generic path
    std::vector<std::vector<double>> g_tau_;     // generic path
};

/// Steps u'' forward in tau from u(0) = c, v(0) = 0. Calls record(j, u, v)
/// after each node (including the start). Returns false as soon as the
/// state stops being finite.
template <typename Recorder>
bool step_trajectory(double c, const MixtureRhs& rhs, IntegrationMethod method,
                     std::size_t n, double dt, Recorder&& record, double& f0_out,
                     double& fprime0_out) {
    double u = c, v = 0.0;
    record(std::size_t{0}, u, v);
    if (method == IntegrationMethod::Euler) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = rhs.accel(u, 2 * j);
            double un = u + dt * v;
            v += dt * acc;
            u = un;
            if (!std::isfinite(u) || !std::isfinite(v)) return false;
            record(j + 1, u, v);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t p0 = 2 * j, pm = 2 * j + 1, p1 = 2 * j + 2;
            double k1u = v;
            double k1v = rhs.accel(u, p0);
            double k2u = v + 0.5 * dt * k1v;
            double k2v = rhs.accel(u + 0.5 * dt * k1u, pm);
            double k3u = v + 0.5 * dt * k2v;
            double k3v = rhs.accel(u + 0.5 * dt * k2u, pm);
            double k4u = v + dt * k3v;
            double k4v = rhs.accel(u + dt * k3u, p1);
            u += dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            if (!std::isfinite(u) || !std::isfinite(v)) return false;
            record(j + 1, u, v);
        }
    }
    f0_out = u;
    fprime0_out = -v;
    return true;
}

struct NullRecorder {
    void operator()(std::size_t, double, double) const {}
};

/// Residual f(0) for a candidate c; NaN when the trajectory diverges.
double residual_at(double c, const MixtureRhs& rhs, IntegrationMethod method,
                   std::size_t n, double dt) {
    double f0 = 0.0, fp0 = 0.0;
    if (!step_trajectory(c, rhs, method, n, dt, NullRecorder{}, f0, fp0))
        return std::numeric_limits<double>::quiet_NaN();
    return f0;
}

ShotResult full_shot(double c, const MixtureRhs& rhs, const GameConfig& cfg,
                     IntegrationMethod method) {
    std::size_t n = cfg.grid.n_steps;
    std::vector<double> u_tau(n + 1), v_tau(n + 1);
    double f0 = 0.0, fp0 = 0.0;
    bool ok = step_trajectory(
        c, rhs, method, n, cfg.grid.dt(),
        [&](std::size_t j, double u, double v) {
            u_tau[j] = u;
            v_tau[j] = v;
        },
        f0, fp0);
    if (!ok)
        throw std::runtime_error("integrate_backward: trajectory diverged (c = " +
                                 std::to_string(c) + ", a = " + std::to_string(cfg.a) + ")");
    ShotResult shot;
    shot.terminal_value = c;
    shot.residual = f0;
    shot.trajectory.grid = cfg.grid;
    shot.trajectory.values.resize(n + 1);
    shot.trajectory.deriv.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        shot.trajectory.values[i] = u_tau[n - i];   // f(t_i) = u(1 - t_i)
        shot.trajectory.deriv[i] = -v_tau[n - i];   // f'(t_i) = -v(1 - t_i)
    }
    return shot;
}

/// Bisection on a sign-change bracket. Both endpoints must have finite
/// residuals of opposite sign. Runs until the residual target is met or the
/// bracket collapses to adjacent doubles, returning the best midpoint seen:
/// residual slopes near unstable equilibria of the pendulum reach ~1e9, so
/// only the full double-precision width certifies those roots' boundary
/// condition.
double bisect_root(double lo, double hi, double r_lo, const MixtureRhs& rhs,
                   IntegrationMethod method, std::size_t n, double dt) {
    double best_c = lo;
    double best_r = std::abs(r_lo);
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;  // bracket is one ULP wide
        double r = residual_at(mid, rhs, method, n, dt);
        if (!std::isfinite(r))
            throw std::runtime_error("scan_roots: divergence inside a root bracket near c = " +
                                     std::to_string(mid));
        if (std::abs(r) < best_r) {
            best_r = std::abs(r);
            best_c = mid;
        }
        if (std::abs(r) <= kResidualTol) return mid;
        if ((r_lo < 0.0) == (r < 0.0)) {
            lo = mid;
            r_lo = r;
        } else {
            hi = mid;
        }
    }
    return best_c;
}

/// Golden-section minimum of sign * residual over [lo, hi]. The signed
/// residual is smooth and single-dipped near a tangential pair, unlike
/// |residual| which develops a W shape once the dip crosses zero.
std::pair<double, double> golden_min(double lo, double hi, double sign,
                                     const MixtureRhs& rhs, IntegrationMethod method,
                                     std::size_t n, double dt) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = sign * residual_at(x1, rhs, method, n, dt);
    double f2 = sign * residual_at(x2, rhs, method, n, dt);
    double best_x = f1 < f2 ? x1 : x2;
    double best_f = std::min(f1, f2);
    for (int iter = 0; iter < 100 && (hi - lo) > 1e-11; ++iter) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = sign * residual_at(x1, rhs, method, n, dt);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = sign * residual_at(x2, rhs, method, n, dt);
        }
        if (f1 < best_f) {
            best_f = f1;
            best_x = x1;
        }
        if (f2 < best_f) {
            best_f = f2;
            best_x = x2;
        }
    }
    return {best_x, best_f};  // best_f is still sign * residual
}

}  // namespace

MixtureTarget MixtureTarget::pure(SampledFn g) {
    MixtureTarget m;
    m.weights = {1.0};
    m.components.push_back(std::move(g));
    return m;
}

void MixtureTarget::validate(const TimeGrid& grid) const {
    if (components.empty())
        throw std::invalid_argument("mixture: no components");
    if (weights.size() != components.size())
        throw std::invalid_argument("mixture: " + std::to_string(weights.size()) +
                                    " weights for " + std::to_string(components.size()) +
                                    " components");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw std::invalid_argument("mixture: negative weight " + std::to_string(w));
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("mixture: weights sum to " + std::to_string(total) +
                                    ", expected 1");
    for (const auto& g : components) {
        if (!(g.grid == grid))
            throw std::invalid_argument("mixture: component grid does not match the config grid");
        if (g.values.size() != g.grid.n_nodes())
            throw std::invalid_argument("mixture: component has wrong sample count");
    }
}

CRange ShootParams::resolved_c_range(double a) const {
    if (c_range) return *c_range;
    double w = 2.0 * std::numbers::pi + 0.25 * a;
    w = std::min(w, 4.0 * std::numbers::pi);
    return {-w, w};
}

ShotResult integrate_backward(double c, const MixtureTarget& mixture, const GameConfig& cfg,
                              IntegrationMethod method) {
    if (!(cfg.a >= 0.0)) throw std::domain_error("integrate_backward: a must be >= 0");
    if (!std::isfinite(c)) throw std::invalid_argument("integrate_backward: c is not finite");
    mixture.validate(cfg.grid);
    MixtureRhs rhs(mixture, cfg);
    return full_shot(c, rhs, cfg, method);
}

std::vector<ShotResult> scan_roots(const MixtureTarget& mixture, const GameConfig& cfg,
                                   const ShootParams& params) {
    if (!(cfg.a >= 0.0)) throw std::domain_error("scan_roots: a must be >= 0");
    mixture.validate(cfg.grid);
    CRange range = params.resolved_c_range(cfg.a);
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.lo < range.hi))
        throw std::invalid_argument("scan_roots: c range must be finite with lo < hi");
    if (params.n_scan < 2)
        throw std::invalid_argument("scan_roots: n_scan must be at least 2");

    MixtureRhs rhs(mixture, cfg);
    std::size_t n = cfg.grid.n_steps;
    double dt = cfg.grid.dt();
    std::size_t m = params.n_scan;

    std::vector<double> cs(m), res(m);
    for (std::size_t i = 0; i < m; ++i)
        cs[i] = range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                               static_cast<double>(m - 1);
    parallel_for(m, [&](std::size_t i) {
        res[i] = residual_at(cs[i], rhs, params.method, n, dt);
    });

    struct Candidate {
        double c;
        bool tangential;
        bool twin = false;  // near-tangent double root: expands to two entries
    };
    std::vector<Candidate> found;

    auto is_root_node = [&](std::size_t i) {
        return std::isfinite(res[i]) && std::abs(res[i]) <= kResidualTol;
    };

    // Pass 1: exact hits and sign-change cells.
    for (std::size_t i = 0; i < m; ++i)
        if (is_root_node(i)) found.push_back({cs[i], false});
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!std::isfinite(res[i]) || !std::isfinite(res[i + 1])) continue;
        if (is_root_node(i) || is_root_node(i + 1)) continue;
        if ((res[i] < 0.0) != (res[i + 1] < 0.0))
            found.push_back(
                {bisect_root(cs[i], cs[i + 1], res[i], rhs, params.method, n, dt), false});
    }

    // Pass 2: local minima of |residual| that stay on one side of zero at
    // scan resolution. A pair of nearly tangential roots shows up as such a
    // dip; refine it and either split the dip into two bracketed roots or,
    // if its peak merely comes within kTangentTol of zero, record a flagged
    // double root (two coincident entries). Such flagged entries may carry
    // |f(0)| up to kTangentTol, looser than the boundary tolerance genuine
    // sign-change roots are refined to.
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (!std::isfinite(res[i - 1]) || !std::isfinite(res[i]) || !std::isfinite(res[i + 1]))
            continue;
        if (std::abs(res[i]) > kDipTrigger) continue;
        if ((res[i - 1] < 0.0) != (res[i] < 0.0)) continue;  // cell already bracketed
        if ((res[i] < 0.0) != (res[i + 1] < 0.0)) continue;
        double ai = std::abs(res[i]);
        if (ai > std::abs(res[i - 1]) || ai > std::abs(res[i + 1])) continue;
        if (ai == std::abs(res[i - 1]) && ai == std::abs(res[i + 1])) continue;
        if (ai <= kResidualTol) continue;  // already recorded as an exact hit

        double sign = res[i] < 0.0 ? -1.0 : 1.0;
        auto [c_dip, signed_min] =
            golden_min(cs[i - 1], cs[i + 1], sign, rhs, params.method, n, dt);
        if (!std::isfinite(signed_min)) continue;
        if (signed_min < -kResidualTol) {
            // The dip crosses zero: two genuine roots hide in this cell pair.
            double r_dip = sign * signed_min;
            found.push_back(
                {bisect_root(cs[i - 1], c_dip, res[i - 1], rhs, params.method, n, dt), true});
            found.push_back(
                {bisect_root(c_dip, cs[i + 1], r_dip, rhs, params.method, n, dt), true});
        } else if (signed_min <= kTangentTol) {
            // The dip only approaches zero: a (near-)tangential double root.
            // It counts as two coincident solutions, so it expands to a twin
            // pair below rather than being silently merged into one entry.
            found.push_back({c_dip, true, true});
        }
    }

    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        if (a.c != b.c) return a.c < b.c;
        return a.tangential < b.tangential;
    });
    std::vector<Candidate> unique;
    for (const auto& cand : found) {
        if (!unique.empty() && cand.c - unique.back().c <= kRootDedupe) continue;
        unique.push_back(cand);
    }
    std::vector<Candidate> expanded;
    for (const auto& cand : unique) {
        expanded.push_back(cand);
        if (cand.twin) expanded.push_back(cand);
    }

    std::vector<ShotResult> roots(expanded.size());
    parallel_for(expanded.size(), [&](std::size_t i) {
        roots[i] = full_shot(expanded[i].c, rhs, cfg, params.method);
        roots[i].tangential = expanded[i].tangential;
    });
    return roots;
}

std::pair<SampledFn, double> best_response(const MixtureTarget& mixture, const GameConfig& cfg,
                                           const ShootParams& params) {
    std::vector<ShotResult> roots = scan_roots(mixture, cfg, params);

    const ShotResult* best = nullptr;
    double best_value = 0.0;
    for (const auto& shot : roots) {
        if (std::abs(shot.residual) > cfg.boundary_tol) continue;
        long double acc = 0.0L;
        for (std::size_t k = 0; k < mixture.components.size(); ++k)
            acc += static_cast<long double>(mixture.weights[k]) *
                   payoff(shot.trajectory, mixture.components[k], cfg);
        double value = static_cast<double>(acc);
        if (best == nullptr || value < best_value) {
            best = &shot;
            best_value = value;
        }
    }
    if (best == nullptr) {
        CRange range = params.resolved_c_range(cfg.a);
        throw std::runtime_error(
            "best_response: no admissible roots in c range [" + std::to_string(range.lo) +
            ", " + std::to_string(range.hi) + "]; widen the range or raise n_scan");
    }
    return {best->trajectory, best_value};
}

std::vector<PhasePoint> phase_portrait(const GameConfig& cfg, const std::vector<double>& c_values,
                                       IntegrationMethod method) {
    if (!(cfg.a >= 0.0)) throw std::domain_error("phase_portrait: a must be >= 0");
    SampledFn zero;
    zero.grid = cfg.grid;
    zero.values.assign(cfg.grid.n_nodes(), 0.0);
    zero.deriv.assign(cfg.grid.n_nodes(), 0.0);
    MixtureTarget mixture = MixtureTarget::pure(std::move(zero));
    MixtureRhs rhs(mixture, cfg);

    std::vector<PhasePoint> points(c_values.size());
    parallel_for(c_values.size(), [&](std::size_t i) {
        double f0 = 0.0, fp0 = 0.0;
        bool ok = step_trajectory(c_values[i], rhs, method, cfg.grid.n_steps, cfg.grid.dt(),
                                  NullRecorder{}, f0, fp0);
        points[i] = ok ? PhasePoint{c_values[i], f0, fp0, false}
                       : PhasePoint{c_values[i], 0.0, 0.0, true};
    });
    return points;
}

}  // namespace varigame
