#include "varigame/matrix_game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace varigame {

namespace {

constexpr double kReducedCostTol = 1e-12;  // reduced cost / pivot cutoff
constexpr double kTruncateProb = 1e-6;     // mixture entries below this are noise
constexpr double kFeasibilityTol = 1e-8;   // required slack of entries * p
constexpr std::size_t kPivotCap = 10000;

void check_square_finite(const std::vector<std::vector<double>>& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("matrix game: empty matrix");
    for (const auto& row : m) {
        if (row.size() != n)
            throw std::invalid_argument("matrix game: matrix is not square");
        for (double v : row)
            if (!std::isfinite(v))
                throw std::invalid_argument("matrix game: non-finite entry");
    }
}

/// Primal simplex with Bland's rule for
///     max 1'y  s.t.  B y <= 1, y >= 0
/// where B is strictly positive (so the feasible set is bounded and the
/// slack basis is feasible). Bland's anti-cycling rule trades speed for
/// a termination guarantee, which is the right call at these tiny sizes.
std::vector<double> maximize_uniform_objective(const std::vector<std::vector<double>>& b) {
    std::size_t n = b.size();
    std::size_t cols = 2 * n + 1;  // structural, slack, rhs
    std::vector<std::vector<double>> t(n + 1, std::vector<double>(cols, 0.0));
    std::vector<std::size_t> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = b[i][j];
        t[i][n + i] = 1.0;
        t[i][2 * n] = 1.0;
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[n][j] = -1.0;

    for (std::size_t pivots = 0;; ++pivots) {
        if (pivots >= kPivotCap)
            throw std::runtime_error(
                "matrix game: simplex exceeded " + std::to_string(kPivotCap) +
                " pivots on a " + std::to_string(n) + "x" + std::to_string(n) +
                " tableau; matrix is likely ill-conditioned");

        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t q = cols;
        for (std::size_t j = 0; j < 2 * n; ++j) {
            if (t[n][j] < -kReducedCostTol) {
                q = j;
                break;
            }
        }
        if (q == cols) break;  // optimal

        // Ratio test; ties broken by smallest basis index (Bland again).
        std::size_t r = n + 1;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (t[i][q] > kReducedCostTol) {
                double ratio = t[i][2 * n] / t[i][q];
                if (r == n + 1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[r])) {
                    r = i;
                    best_ratio = ratio;
                }
            }
        }
        if (r == n + 1)
            throw std::runtime_error("matrix game: LP unbounded; matrix shift failed");

        double piv = t[r][q];
        for (std::size_t j = 0; j < cols; ++j) t[r][j] /= piv;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == r) continue;
            double factor = t[i][q];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[r][j];
        }
        basis[r] = q;
    }

    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (basis[i] < n) y[basis[i]] = t[i][2 * n];
    return y;
}

}  // namespace

std::vector<std::size_t> MixedStrategy::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < probabilities.size(); ++i)
        if (probabilities[i] > 0.0) idx.push_back(i);
    return idx;
}

MixedStrategy solve_symmetric_game(const std::vector<std::vector<double>>& entries) {
    check_square_finite(entries);
    std::size_t n = entries.size();

    double asym = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            asym = std::max(asym, std::abs(entries[i][j] + entries[j][i]));
            scale = std::max(scale, std::abs(entries[i][j]));
        }
    if (asym > 1e-9)
        throw std::invalid_argument(
            "matrix game: matrix is not antisymmetric (max |M + M^T| = " +
            std::to_string(asym) + " > 1e-9); antisymmetrize it first");

    // Shift-and-normalize: B = M/K + 1 with K > max|M| makes every entry
    // strictly positive without moving the equilibrium, so the bounded LP
    //   max 1'y, By <= 1, y >= 0
    // recovers the optimal mixture as p = y / 1'y.
    double k = 1.0 + scale;
    std::vector<std::vector<double>> b(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = entries[i][j] / k + 1.0;

    std::vector<double> y = maximize_uniform_objective(b);
    double total = 0.0;
    for (double v : y) total += v;
    if (!(total > 0.0))
        throw std::runtime_error("matrix game: degenerate LP solution (sum y = 0)");

    MixedStrategy p;
    p.probabilities.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = y[i] / total;
        if (v < -1e-12)
            throw std::runtime_error("matrix game: negative probability " +
                                     std::to_string(v) + " from LP");
        p.probabilities[i] = std::max(v, 0.0);
    }

    double kept = 0.0;
    for (double& v : p.probabilities) {
        if (v < kTruncateProb) v = 0.0;
        kept += v;
    }
    if (!(kept > 0.0))
        throw std::runtime_error("matrix game: all probabilities truncated to zero");
    for (double& v : p.probabilities) v /= kept;

    for (double s : expected_payoffs(entries, p))
        if (!(s <= kFeasibilityTol))
            throw std::runtime_error(
                "matrix game: solution violates entries * p <= " +
                std::to_string(kFeasibilityTol) + " (got " + std::to_string(s) + ")");
    return p;
}

MixedStrategy solve_symmetric_game(const PayoffMatrix& m) {
    return solve_symmetric_game(m.entries);
}

std::vector<double> expected_payoffs(const std::vector<std::vector<double>>& entries,
                                     const MixedStrategy& p) {
    check_square_finite(entries);
    if (p.probabilities.size() != entries.size())
        throw std::invalid_argument("expected_payoffs: dimension mismatch");
    std::vector<double> out(entries.size(), 0.0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j < entries.size(); ++j)
            acc += static_cast<long double>(entries[i][j]) * p.probabilities[j];
        out[i] = static_cast<double>(acc);
    }
    return out;
}

std::optional<MixedStrategy> cycle_equilibrium_3x3(
    const std::vector<std::vector<double>>& entries) {
    check_square_finite(entries);
    if (entries.size() != 3) return std::nullopt;
    // M p = 0 with p in the simplex forces p proportional to the kernel
    // vector of the antisymmetric matrix; components must share a sign.
    double q0 = entries[1][2];
    double q1 = -entries[0][2];
    double q2 = entries[0][1];
    bool all_pos = q0 > 0.0 && q1 > 0.0 && q2 > 0.0;
    bool all_neg = q0 < 0.0 && q1 < 0.0 && q2 < 0.0;
    if (!all_pos && !all_neg) return std::nullopt;
    double total = q0 + q1 + q2;
    MixedStrategy p;
    p.probabilities = {q0 / total, q1 / total, q2 / total};
    return p;
}

}  // namespace varigame
