#pragma once

#include <cstddef>
#include <functional>

namespace etapair {

/// 0 or unset resolves to the hardware thread count (at least 1).
unsigned resolve_thread_count(unsigned requested);

/// Runs body(i) for i in [0, count) across at most `threads` workers.
/// Callers own determinism: write results into preassigned slots.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace etapair
