#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gpgrowth {

// Runs body(chunk, begin, end) over `threads` contiguous chunks of [0, n).
// Chunk boundaries depend only on n and threads; callers combine per-chunk
// results in chunk order so the outcome is independent of scheduling.
template <typename Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * threads) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t step = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = std::min(n, t * step), end = std::min(n, begin + step);
    workers.emplace_back([&, t, begin, end] {
      try {
        body(static_cast<std::size_t>(t), begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Runs body(task) for task = 0..tasks-1, one thread per task.
template <typename Body>
void parallel_tasks(unsigned tasks, Body&& body) {
  if (tasks <= 1) {
    if (tasks == 1) body(std::size_t{0});
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(tasks);
  for (unsigned t = 0; t < tasks; ++t)
    workers.emplace_back([&, t] {
      try {
        body(static_cast<std::size_t>(t));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline unsigned chunk_count(std::size_t n, unsigned threads) {
  threads = std::max(1u, threads);
  return (threads == 1 || n < 2 * threads) ? 1u : threads;
}

}  // namespace gpgrowth
