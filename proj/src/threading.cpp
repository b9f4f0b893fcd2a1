#include "squant/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace squant {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SPECTRUM_QUANT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(), std::max<std::int64_t>(n, 1)));
  if (workers <= 1 || n < 1024) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace squant
