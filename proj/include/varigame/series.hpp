#pragma once
#include <cstddef>
#include <vector>

namespace varigame {

/// Truncated power series f(t) = sum_n b_n t^n around t = 0 for the
/// g = 0 self-play equation with the sin kernel approximated to cubic
/// order: f'' = -(a/2)(1 - f^2/2). Terms follow the recurrence
///   2 b_2 = -a/2 + (a/4) b_0^2,
///   (n+2)(n+1) b_{n+2} = (a/4) sum_{i+j=n} b_i b_j   for n >= 1,
/// seeded by b_0 = 0 (left boundary) and b_1 = k (unknown slope).
struct SeriesApprox {
    double a = 0.0;
    double k = 0.0;
    std::vector<double> coeffs;  // b_0 .. b_N

    double eval(double t) const;
    double value_at_one() const;
    double derivative_at_one() const;
    double second_derivative_at_one() const;
};

SeriesApprox series_coefficients(double a, double k, std::size_t n_terms);

/// Initial slope k for which the series satisfies f'(1) = 0, found by a
/// sign-change scan over [0, a] refined by bisection to |f'(1)| <= 1e-9.
double solve_k(double a, std::size_t n_terms = 10);

/// One accuracy comparison between the series route and the shooting
/// route, both evaluating f''(1): the series sums n(n-1) b_n, the ODE
/// route substitutes f(1) into f'' = -(a/2) cos(f). The two derivations
/// are independent, so their percentage gap measures how far the cubic
/// truncation has drifted at this a.
struct SeriesAccuracyRow {
    double a = 0.0;
    double k = 0.0;
    double series_fpp1 = 0.0;
    double ode_fpp1 = 0.0;
    double percent_difference = 0.0;
};

SeriesAccuracyRow accuracy_row(double a, std::size_t n_terms = 10);

}  // namespace varigame
