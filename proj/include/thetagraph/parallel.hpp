#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace thetagraph {

/// Splits [begin, end) into `threads` contiguous chunks and runs
/// body(chunk_index, chunk_begin, chunk_end) on each, one std::thread per
/// chunk beyond the first. Chunk boundaries depend only on the inputs, so
/// per-chunk partial results can be merged deterministically.
template <class Body>
void parallel_ranges(std::uint64_t begin, std::uint64_t end, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (threads == 1 || total < 2 * threads) {
    body(0u, begin, end);
    return;
  }
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::jthread> workers;
  workers.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) {
    const std::uint64_t lo = std::min(end, begin + t * chunk);
    const std::uint64_t hi = std::min(end, lo + chunk);
    workers.emplace_back([&body, t, lo, hi] { body(t, lo, hi); });
  }
  body(0u, begin, std::min(end, begin + chunk));
}

}  // namespace thetagraph
