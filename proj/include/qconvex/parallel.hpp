#ifndef QCONVEX_PARALLEL_HPP
#define QCONVEX_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qconvex {

/// Worker count for grid checks. One thread means run inline.
struct Parallelism {
  unsigned threads = 1;

  static Parallelism sequential() { return {1}; }
  /// QCONVEX_THREADS when set to a positive integer, else hardware concurrency.
  static Parallelism from_env();
};

/// Calls fn(i) for every i in [begin, end). Indices are handed out
/// dynamically, so fn must only write to per-index state. The first
/// exception thrown by any call is rethrown after all workers finish.
template <class Fn>
void parallel_for(long begin, long end, const Parallelism& par, Fn&& fn) {
  if (end <= begin) return;
  const long count = end - begin;
  const unsigned workers = static_cast<unsigned>(std::min<long>(std::max(1U, par.threads), count));
  if (workers == 1) {
    for (long i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<long> next{begin};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (long i = next.fetch_add(1); i < end; i = next.fetch_add(1)) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(end);
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace qconvex

#endif  // QCONVEX_PARALLEL_HPP
