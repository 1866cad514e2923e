#include "varigame/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace varigame {

double SeriesApprox::eval(double t) const {
    double acc = 0.0;
    for (std::size_t n = coeffs.size(); n-- > 0;) acc = acc * t + coeffs[n];
    return acc;
}

double SeriesApprox::value_at_one() const {
    double acc = 0.0;
    for (double b : coeffs) acc += b;
    return acc;
}

double SeriesApprox::derivative_at_one() const {
    double acc = 0.0;
    for (std::size_t n = 1; n < coeffs.size(); ++n)
        acc += static_cast<double>(n) * coeffs[n];
    return acc;
}

double SeriesApprox::second_derivative_at_one() const {
    double acc = 0.0;
    for (std::size_t n = 2; n < coeffs.size(); ++n)
        acc += static_cast<double>(n * (n - 1)) * coeffs[n];
    return acc;
}

SeriesApprox series_coefficients(double a, double k, std::size_t n_terms) {
    if (!(a >= 0.0)) throw std::domain_error("series_coefficients: a must be >= 0");
    if (n_terms < 2)
        throw std::invalid_argument("series_coefficients: need at least terms b_0..b_2");

    SeriesApprox s;
    s.a = a;
    s.k = k;
    s.coeffs.assign(n_terms + 1, 0.0);
    s.coeffs[0] = 0.0;
    s.coeffs[1] = k;
    s.coeffs[2] = -0.25 * a;  // 2 b_2 = -a/2 + (a/4) b_0^2 with b_0 = 0
    for (std::size_t n = 1; n + 2 <= n_terms; ++n) {
        double conv = 0.0;
        for (std::size_t i = 0; i <= n; ++i) conv += s.coeffs[i] * s.coeffs[n - i];
        s.coeffs[n + 2] =
            0.25 * a * conv / static_cast<double>((n + 2) * (n + 1));
    }
    return s;
}

double solve_k(double a, std::size_t n_terms) {
    if (!(a >= 0.0)) throw std::domain_error("solve_k: a must be >= 0");
    if (a == 0.0) return 0.0;

    auto slope_gap = [&](double k) {
        return series_coefficients(a, k, n_terms).derivative_at_one();
    };

    // f'(1) rises with k (more initial slope, less time to bend back), so a
    // coarse scan over [0, a] brackets the first sign change.
    const std::size_t cells = 256;
    double prev_k = 0.0;
    double prev_v = slope_gap(0.0);
    if (prev_v == 0.0) return 0.0;
    double lo = 0.0, hi = 0.0, lo_v = 0.0;
    bool bracketed = false;
    for (std::size_t i = 1; i <= cells; ++i) {
        double ki = a * static_cast<double>(i) / static_cast<double>(cells);
        double vi = slope_gap(ki);
        if (vi == 0.0) return ki;
        if ((prev_v < 0.0) != (vi < 0.0)) {
            lo = prev_k;
            hi = ki;
            lo_v = prev_v;
            bracketed = true;
            break;
        }
        prev_k = ki;
        prev_v = vi;
    }
    if (!bracketed)
        throw std::runtime_error(
            "solve_k: f'(1) has no sign change for k in [0, " + std::to_string(a) +
            "]; the truncated series no longer captures this a");

    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15; ++iter) {
        double mid = 0.5 * (lo + hi);
        double v = slope_gap(mid);
        if (std::abs(v) <= 1e-9) return mid;
        if ((v < 0.0) == (lo_v < 0.0)) {
            lo = mid;
            lo_v = v;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SeriesAccuracyRow accuracy_row(double a, std::size_t n_terms) {
    SeriesAccuracyRow row;
    row.a = a;
    row.k = solve_k(a, n_terms);
    SeriesApprox s = series_coefficients(a, row.k, n_terms);
    row.series_fpp1 = s.second_derivative_at_one();
    row.ode_fpp1 = -0.5 * a * std::cos(s.value_at_one());
    if (row.ode_fpp1 == 0.0) {
        row.percent_difference = row.series_fpp1 == 0.0
                                     ? 0.0
                                     : std::numeric_limits<double>::infinity();
    } else {
        row.percent_difference =
            std::abs(row.series_fpp1 - row.ode_fpp1) / std::abs(row.ode_fpp1) * 100.0;
    }
    return row;
}

}  // namespace varigame
