#pragma once
#include <cstddef>
#include <functional>

namespace varigame {

/// Worker-thread budget: VARIGAME_THREADS if set to a positive value,
/// otherwise (or when 0) the hardware concurrency.
std::size_t thread_budget();

/// Runs fn(i) for every i in [0, n). Work items must be independent and
/// write only to per-index slots, so the result does not depend on
/// scheduling. Falls back to a plain loop when one worker suffices.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace varigame
