#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace shellbound {

// Process-wide default used when a caller passes threads == 0.
void set_default_threads(unsigned threads);
unsigned default_threads();

inline unsigned resolve_threads(unsigned requested) {
  return requested != 0 ? requested : default_threads();
}

// Runs task(i) for i in [0, tasks) on up to `threads` workers. Tasks are
// claimed dynamically; callers write results into per-task slots so the
// merged output does not depend on the schedule.
template <typename Task>
void parallel_for(std::size_t tasks, unsigned threads, Task&& task) {
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_threads(threads), tasks == 0 ? 1 : tasks));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    try {
      for (std::size_t i = next++; i < tasks; i = next++) task(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = tasks;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace shellbound
