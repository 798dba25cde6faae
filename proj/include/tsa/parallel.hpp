/*
Chunked worker pool with deterministic result placement.

Workers pull chunk indices from a shared counter and write results only
into caller-owned slots keyed by chunk index, so reductions can run in
fixed chunk order and reported numbers never depend on the worker count.
*/

#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace tsa {

// Worker count resolution: explicit argument wins, then the
// TSASIM_WORKERS environment variable, then hardware concurrency.
inline unsigned resolve_workers(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TSASIM_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs chunk_fn(c) for every c in [0, num_chunks) across `workers` threads.
// chunk_fn must confine writes to storage owned by chunk c.
inline void parallel_chunks(std::size_t num_chunks, unsigned workers,
                            const std::function<void(std::size_t)>& chunk_fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || num_chunks <= 1) {
    for (std::size_t c = 0; c < num_chunks; ++c) chunk_fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= num_chunks) return;
      chunk_fn(c);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(
      std::min<std::size_t>(workers, num_chunks));
  pool.reserve(spawn);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace tsa
