#pragma once

#include <cstdint>
#include <functional>

namespace wordlab {

// Worker count from the WORDLAB_THREADS environment variable; unset or
// unparsable means 1. Clamped to [1, 64].
unsigned worker_count();

// Splits [0, total) into one contiguous chunk per worker and runs
// fn(chunk_index, begin, end) for each, on separate threads when more than
// one worker is configured. Chunk boundaries depend only on `total` and the
// worker count, so callers that write results into per-index slots get
// schedule-independent output.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace wordlab
