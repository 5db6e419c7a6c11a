#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace primekit::detail {

/// Calls body(begin, end, worker) over [0, count) split into `jobs`
/// contiguous blocks. Rethrows the first exception after all workers join.
template <class Body>
void parallel_blocks(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    body(std::size_t{0}, count, 0u);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::size_t block = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = std::min(count, w * block);
    const std::size_t end = std::min(count, begin + block);
    workers.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace primekit::detail
