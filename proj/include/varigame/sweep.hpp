#pragma once
#include <cstddef>
#include <vector>

#include "varigame/double_oracle.hpp"

namespace varigame {

/// One point of the bifurcation data: equilibrium support size and the
/// endpoints f(1) of the support functions (sorted ascending, with the
/// probabilities carried along in the same order). `low_confidence` marks
/// sin3 records beyond a ~ 56 computed at dt > 5e-5, where the integration
/// accuracy is known to fall behind the equilibrium structure.
struct SweepRecord {
    double a = 0.0;
    std::size_t support_size = 0;
    std::vector<double> endpoints;
    std::vector<double> probabilities;
    bool converged = false;
    bool low_confidence = false;
};

struct Transition {
    double a_low = 0.0;
    double a_high = 0.0;
    std::size_t old_size = 0;
    std::size_t new_size = 0;
};

struct SweepOptions {
    double threshold = 1e-5;
    std::size_t max_iter = 50;
    OracleOptions oracle;
    bool refine = false;  // one extra pass at step/10 around each transition
};

/// One equilibrium per a in {a_min, a_min+step, ...} <= a_max, each computed
/// independently from the default seeds; failures become converged=false
/// records instead of aborting the sweep. Results sorted by a.
std::vector<SweepRecord> sweep_equilibria(double a_min, double a_max, double step,
                                          const GameConfig& cfg_template,
                                          const SweepOptions& opts = {});

/// Consecutive converged records with different support sizes.
std::vector<Transition> detect_transitions(const std::vector<SweepRecord>& records);

}  // namespace varigame
