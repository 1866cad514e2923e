#pragma once

namespace varigame::cli {

/// Entry point behind the varigame binary. Exit codes: 0 success,
/// 1 computational failure (divergence, non-convergence, failed check),
/// 2 usage or configuration error.
int run(int argc, const char* const* argv);

}  // namespace varigame::cli
