#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace frobmean {

/// Worker count from FROBMEAN_WORKERS, else hardware concurrency (at least 1).
unsigned default_workers();

/*
 * Splits [begin, end) into `workers` contiguous chunks and runs
 * fn(chunk_index, lo, hi) on each, one thread per chunk. Chunk i always
 * covers the same range for a given worker count, so callers can merge
 * per-chunk partials in index order for a deterministic result. The first
 * exception thrown by any chunk is rethrown after all threads join.
 */
template <typename Fn>
void parallel_chunks(std::int64_t begin, std::int64_t end, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  const std::int64_t total = std::max<std::int64_t>(0, end - begin);
  if (workers == 1 || total < 2) {
    fn(0u, begin, end);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t lo = begin + total * w / workers;
      const std::int64_t hi = begin + total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        try {
          fn(w, lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace frobmean
