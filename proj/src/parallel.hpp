#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cgeom::detail {

inline thread_local bool in_worker = false;

// Runs body(k) for k in [0, count) across hardware threads (serially when
// already inside a worker), at least `grain` items per thread; the first
// exception thrown is rethrown on the caller.
template <class Body>
inline void parallel_for(std::size_t count, Body&& body, std::size_t grain = 16) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, count / std::max<std::size_t>(1, grain)));
  if (workers <= 1 || in_worker) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      in_worker = true;
      for (std::size_t k; !failed && (k = next++) < count;) {
        try {
          body(k);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cgeom::detail
