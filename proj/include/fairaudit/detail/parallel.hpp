#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace fairaudit::detail {

/// Splits [0, n) into at most `threads` contiguous ranges of near-equal size.
std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t n, unsigned threads);

/// Runs fn(chunk_index, begin, end) for each chunk, one thread per chunk
/// (inline when there is at most one chunk). Worker exceptions are rethrown
/// after all threads have joined.
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace fairaudit::detail
