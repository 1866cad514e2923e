#pragma once
#include <string>
#include <vector>

#include "varigame/grid.hpp"

namespace varigame {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_full(double v);

/// CSV with columns t,f (plus fprime when derivative samples are attached),
/// 17 significant digits. Lines in `comments` are emitted first, each
/// prefixed with "# ".
void write_sampled_fn_csv(const std::string& path, const SampledFn& f,
                          const std::vector<std::string>& comments = {});

/// Reads the format written above. '#' lines and a header row are skipped;
/// the t column must be a uniform grid over [0, 1].
SampledFn read_sampled_fn_csv(const std::string& path);

/// Square headerless numeric CSV.
void write_matrix_csv(const std::string& path,
                      const std::vector<std::vector<double>>& entries);
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);

}  // namespace varigame
