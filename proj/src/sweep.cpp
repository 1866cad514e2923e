#include "varigame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace varigame {

namespace {

SweepRecord record_for(double a, const GameConfig& cfg_template, const SweepOptions& opts) {
    GameConfig cfg = cfg_template;
    cfg.a = a;

    SweepRecord rec;
    rec.a = a;
    rec.low_confidence = cfg.kernel.kind() == OddKernel::Kind::Sin3 && a > 56.0 &&
                         cfg.grid.dt() > 5e-5;
    try {
        EquilibriumReport report =
            find_equilibrium(cfg, default_seeds(cfg), opts.threshold, opts.max_iter, opts.oracle);
        rec.converged = report.converged;
        rec.support_size = report.support.size();
        std::vector<std::size_t> order(report.support.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            return report.support[i].values.back() < report.support[j].values.back();
        });
        for (std::size_t i : order) {
            rec.endpoints.push_back(report.support[i].values.back());
            rec.probabilities.push_back(report.probabilities.probabilities[i]);
        }
    } catch (const std::exception&) {
        rec.converged = false;  // keep sweeping; the record itself is the report
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> sweep_equilibria(double a_min, double a_max, double step,
                                          const GameConfig& cfg_template,
                                          const SweepOptions& opts) {
    if (!(a_min >= 0.0) || !(a_max >= a_min))
        throw std::invalid_argument("sweep_equilibria: need 0 <= a_min <= a_max");
    if (!(step > 0.0)) throw std::invalid_argument("sweep_equilibria: step must be > 0");

    std::vector<double> grid;
    for (double a = a_min; a <= a_max + 0.5 * step; a += step)
        grid.push_back(std::min(a, a_max));
    if (!grid.empty() && grid.size() >= 2 && grid[grid.size() - 1] == grid[grid.size() - 2])
        grid.pop_back();

    std::vector<SweepRecord> records;
    records.reserve(grid.size());
    for (double a : grid) records.push_back(record_for(a, cfg_template, opts));

    if (opts.refine) {
        std::vector<double> extra;
        for (const Transition& tr : detect_transitions(records)) {
            for (int k = 1; k < 10; ++k) {
                double a = tr.a_low + (tr.a_high - tr.a_low) * k / 10.0;
                extra.push_back(a);
            }
        }
        for (double a : extra) records.push_back(record_for(a, cfg_template, opts));
        std::sort(records.begin(), records.end(),
                  [](const SweepRecord& x, const SweepRecord& y) { return x.a < y.a; });
    }
    return records;
}

std::vector<Transition> detect_transitions(const std::vector<SweepRecord>& records) {
    std::vector<Transition> out;
    const SweepRecord* prev = nullptr;
    for (const auto& rec : records) {
        if (!rec.converged) continue;
        if (prev && prev->support_size != rec.support_size)
            out.push_back({prev->a, rec.a, prev->support_size, rec.support_size});
        prev = &rec;
    }
    return out;
}

}  // namespace varigame
