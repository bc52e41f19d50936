#ifndef HALFINT_UTIL_HPP
#define HALFINT_UTIL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace halfint {

// Global worker count used by the parallel helpers; set once by the CLI /
// test harness. 1 = serial.
int worker_count();
void set_worker_count(int n);

// Runs fn(i) for i in [begin, end). Work is split into fixed-size blocks so
// each index is processed exactly once; results must be written to
// per-index slots by the caller for determinism.
void parallel_for(long begin, long end, const std::function<void(long)>& fn);

// Deterministic pairwise tree sum of a vector of doubles: the reduction
// order depends only on the vector length, never on thread scheduling.
double tree_sum(std::vector<double>& v);

}  // namespace halfint

#endif
