#include "spinhecke/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spinhecke {

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char *env = std::getenv("SPINHECKE_THREADS");
  if (!env || !*env) return hw;
  char *end = nullptr;
  long k = std::strtol(env, &end, 10);
  if (*end != '\0' || k < 0) return hw;
  return k == 0 ? hw : static_cast<unsigned>(k);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace spinhecke
