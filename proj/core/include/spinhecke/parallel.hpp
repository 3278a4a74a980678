#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace spinhecke {

/// Worker cap from SPINHECKE_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/// Runs body(0..count-1) on up to worker_count() threads.  The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

struct Report {
  bool ok = true;
  std::string detail;  ///< first counterexample, or a summary line

  void fail(std::string what) {
    if (ok) detail = std::move(what);
    ok = false;
  }
};

}  // namespace spinhecke
