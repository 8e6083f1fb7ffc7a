#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hblab {

/// Worker count: min(hardware, HBLAB_THREADS). HBLAB_THREADS <= 1 disables
/// parallelism.
inline int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("HBLAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

/// Runs f(i) for i in [begin, end). Each index writes only its own output
/// slot, so results are identical for any worker count.
template <class F>
void parallel_for(int begin, int end, F&& f, int threads = -1) {
  if (threads < 0) threads = thread_cap();
  const int count = end - begin;
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (int i = begin; i < end; ++i) f(i);
    return;
  }
  threads = std::min(threads, count);
  std::atomic<int> next(begin);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= end) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hblab
