#include "specpts/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace specpts {

int thread_budget() {
  if (const char* env = std::getenv("SPECPTS_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  const int workers = std::min(thread_budget(), count);
  if (workers == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + int(std::int64_t(count) * w / workers);
    const int hi = begin + int(std::int64_t(count) * (w + 1) / workers);
    pool.emplace_back([&, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace specpts
