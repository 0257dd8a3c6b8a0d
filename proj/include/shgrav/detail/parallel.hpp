#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace shgrav::detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(block_index, begin, end) over fixed-size blocks of [0, count).
/// Block boundaries depend only on count and block_size, never on the thread
/// count, so per-block results can be merged in block order to get
/// bit-identical totals for any number of threads.
template <class Fn>
void for_each_block(std::size_t count, std::size_t block_size, int threads, Fn&& fn) {
  if (count == 0) return;
  const std::size_t n_blocks = (count + block_size - 1) / block_size;
  const int n_threads = resolve_threads(threads);

  if (n_threads <= 1 || n_blocks == 1) {
    for (std::size_t b = 0; b < n_blocks; ++b)
      fn(b, b * block_size, std::min(count, (b + 1) * block_size));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= n_blocks || failed.load()) return;
      try {
        fn(b, b * block_size, std::min(count, (b + 1) * block_size));
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace shgrav::detail
