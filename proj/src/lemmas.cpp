#include "varigame/lemmas.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace varigame {

double sin_deficit_ratio(double y) {
    if (std::abs(y) < 1e-4) {
        // (y - sin y)/y^2 = y/6 - y^3/120 + y^5/5040 - ...; two terms are
        // exact to ~1e-20 here, while the direct quotient loses ~8 digits.
        return y / 6.0 - y * y * y / 120.0;
    }
    return (y - std::sin(y)) / (y * y);
}

LemmaVerdict check_sin_inequality(double lo, double hi, std::size_t n_points) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
        throw std::invalid_argument("check_sin_inequality: grid range must be finite");
    if (n_points == 0)
        throw std::invalid_argument("check_sin_inequality: empty grid");

    double max_val = -std::numeric_limits<double>::infinity();
    double argmax = lo;
    for (std::size_t i = 0; i < n_points; ++i) {
        double y = n_points == 1
                       ? lo
                       : lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(n_points - 1);
        double v = sin_deficit_ratio(y);
        if (v > max_val) {
            max_val = v;
            argmax = y;
        }
    }
    double bound = 1.0 / std::numbers::pi;
    LemmaVerdict verdict;
    verdict.name = "sin_deficit_ratio_max";
    verdict.witness_location = argmax;
    verdict.worst_margin = bound - max_val;
    verdict.passed = max_val <= bound + 1e-9;
    return verdict;
}

FourierIntegrals fourier_integrals(const std::vector<double>& coeffs) {
    FourierIntegrals out;
    double half_pi = 0.5 * std::numbers::pi;
    for (std::size_t m = 1; m <= coeffs.size(); ++m) {
        double amp2 = coeffs[m - 1] * coeffs[m - 1];
        double freq = static_cast<double>(m) * half_pi;
        out.int_f_squared += amp2;
        out.int_fprime_squared += freq * freq * amp2;
    }
    return out;
}

LemmaVerdict check_fourier_inequality(std::size_t modes, std::size_t trials,
                                      std::uint64_t seed) {
    if (modes < 1) throw std::invalid_argument("check_fourier_inequality: modes >= 1");
    if (trials < 1) throw std::invalid_argument("check_fourier_inequality: trials >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double factor = 0.25 * std::numbers::pi * std::numbers::pi;  // (pi/2)^2

    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_trial = 0;
    std::vector<double> coeffs(modes);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (double& c : coeffs) c = unit(rng);
        FourierIntegrals f = fourier_integrals(coeffs);
        double margin = f.int_fprime_squared - factor * f.int_f_squared;
        if (margin < worst) {
            worst = margin;
            worst_trial = trial;
        }
    }
    LemmaVerdict verdict;
    verdict.name = "fourier_gradient_inequality";
    verdict.witness_location = static_cast<double>(worst_trial);
    verdict.worst_margin = worst;
    verdict.passed = worst >= -1e-9;
    return verdict;
}

double nash_bound() {
    return std::numbers::pi * std::numbers::pi * std::numbers::pi / 4.0;
}

}  // namespace varigame
