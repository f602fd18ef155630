#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace permuto {

struct ExecutionOptions {
  unsigned jobs = 1;  // worker threads; 0 means one per hardware thread
};

inline unsigned resolve_jobs(const ExecutionOptions& options) {
  if (options.jobs != 0) return options.jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs task(0..tasks-1) on up to `jobs` threads and folds the results in
/// task order, so the outcome never depends on scheduling.
template <typename T, typename Task>
T ordered_reduce(std::size_t tasks, const ExecutionOptions& options, T init, Task task) {
  std::vector<std::invoke_result_t<Task&, std::size_t>> partial(tasks);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(options), tasks));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) partial[t] = task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
          try {
            partial[t] = task(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& thread : pool) thread.join();
    if (failure) std::rethrow_exception(failure);
  }
  for (auto& value : partial) init += value;
  return init;
}

}  // namespace permuto
