#pragma once
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace varigame {

/// Outcome of one numerically screened inequality.
struct LemmaVerdict {
    std::string name;
    bool passed = false;
    double witness_location = 0.0;  // where the worst case occurred
    double worst_margin = 0.0;      // how much slack was left there
};

/// (y - sin y) / y^2, extended by continuity with value 0 at y = 0. A
/// short Taylor branch keeps tiny |y| away from the catastrophic
/// cancellation in the direct formula.
double sin_deficit_ratio(double y);

/// Screens sup_y (y - sin y)/y^2 <= 1/pi on a uniform grid over
/// [lo, hi]. The verdict reports the grid argmax and the remaining
/// margin 1/pi - max.
LemmaVerdict check_sin_inequality(double lo, double hi, std::size_t n_points);

/// Exact Parseval integrals over [0, 2] for f(t) = sum_m a_m sin(m pi t / 2)
/// (odd, period 4, f(0) = f(2) = 0):
///   int f^2 = sum a_m^2,  int f'^2 = sum (m pi / 2)^2 a_m^2.
struct FourierIntegrals {
    double int_f_squared = 0.0;
    double int_fprime_squared = 0.0;
};
FourierIntegrals fourier_integrals(const std::vector<double>& coeffs);

/// Randomized screen of int f'^2 >= (pi/2)^2 int f^2 over `trials` draws
/// of `modes` coefficients uniform in [-1, 1]: checks that the margin
/// int f'^2 - (pi/2)^2 int f^2 never drops below -1e-9. The witness
/// location is the worst trial's index.
LemmaVerdict check_fourier_inequality(std::size_t modes, std::size_t trials,
                                      std::uint64_t seed);

/// Threshold pi^3 / 4 below which the quadratic-cost argument pins the
/// equilibrium to a single pure strategy.
double nash_bound();

}  // namespace varigame
