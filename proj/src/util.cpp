#include "halfint/util.hpp"

#include <atomic>

namespace halfint {

namespace {
int g_workers = 1;
}

int worker_count() { return g_workers; }
void set_worker_count(int n) { g_workers = n < 1 ? 1 : n; }

void parallel_for(long begin, long end, const std::function<void(long)>& fn) {
  long total = end - begin;
  if (total <= 0) return;
  int nw = g_workers;
  if (nw <= 1 || total < 64) {
    for (long i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<long> next(begin);
  const long block = std::max<long>(1, total / (8 * nw));
  auto work = [&]() {
    for (;;) {
      long lo = next.fetch_add(block);
      if (lo >= end) break;
      long hi = std::min(end, lo + block);
      for (long i = lo; i < hi; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nw - 1; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

double tree_sum(std::vector<double>& v) {
  if (v.empty()) return 0.0;
  size_t n = v.size();
  while (n > 1) {
    size_t half = (n + 1) / 2;
    for (size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
    n = half;
  }
  return v[0];
}

}  // namespace halfint
