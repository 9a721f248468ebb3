#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace pbd {

inline int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Splits [0, total) into chunks pulled by worker threads.  The body may set
/// `stop` to cancel outstanding work; first setter wins.  Used by the
/// dimension and coverage scans, where inputs are shared read-only.
inline void parallel_chunks(std::uint64_t total, int jobs,
                            const std::function<void(std::uint64_t, std::uint64_t,
                                                     std::atomic<bool>&)>& body) {
  jobs = effective_jobs(jobs);
  if (total == 0) return;
  std::uint64_t chunk = 4096;
  if (total / chunk < static_cast<std::uint64_t>(jobs) * 4)
    chunk = total / (static_cast<std::uint64_t>(jobs) * 4) + 1;

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) return;
      std::uint64_t end = begin + chunk < total ? begin + chunk : total;
      body(begin, end, stop);
    }
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

}  // namespace pbd
