#ifndef LIECENSUS_SRC_PARALLEL_HPP
#define LIECENSUS_SRC_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace liecensus::detail {

/// Run fn(i) for i in [0, count) on a bounded worker pool.  Callers keep
/// results in index-addressed slots, so output order never depends on
/// scheduling; the first exception wins and is rethrown after join.
template <typename Fn>
void parallel_index_for(std::size_t count, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(count, hw ? hw : 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

} // namespace liecensus::detail

#endif
