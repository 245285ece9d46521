#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rankcal {

/// Clamps a requested worker count to [1, count]. Zero or negative requests
/// mean "one worker" (callers resolve env/flag defaults before this point).
inline int resolve_threads(int requested, std::uint64_t count) {
  if (requested < 1) requested = 1;
  if (static_cast<std::uint64_t>(requested) > count && count > 0)
    requested = static_cast<int>(count);
  return requested;
}

/// Runs body(begin, end, worker) over a contiguous partition of [0, count).
/// Each index must be processed independently of thread layout; callers
/// either write to per-index slots or merge per-worker results in an
/// order-insensitive way.
inline void parallel_chunks(std::uint64_t count, int threads,
                            const std::function<void(std::uint64_t, std::uint64_t, int)>& body) {
  const int workers = resolve_threads(threads, count);
  if (count == 0) return;
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = count / workers;
  const std::uint64_t rem = count % workers;
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    const std::uint64_t end = begin + len;
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace rankcal
