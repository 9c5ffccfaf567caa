#pragma once

#include <cstdint>

namespace bimlab {

// The exhaustive scans below all share one shape: test a predicate over a
// flat index space and report the least violating index (or -1). The serial
// versions are the reference semantics; the parallel versions must return
// bit-identical results for any thread count, which the block-wise
// min-reduction below guarantees.

int effective_jobs(int jobs);

template <typename Pred>
long long first_violation_serial(long long count, Pred&& holds) {
  for (long long i = 0; i < count; ++i)
    if (!holds(i)) return i;
  return -1;
}

template <typename Pred>
long long first_violation_parallel(long long count, Pred&& holds, int jobs);

// Dispatch: jobs <= 1 runs the serial reference.
template <typename Pred>
long long first_violation(long long count, Pred&& holds, int jobs) {
  if (jobs <= 1 || count < 4096) return first_violation_serial(count, holds);
  return first_violation_parallel(count, holds, jobs);
}

}  // namespace bimlab

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bimlab {

template <typename Pred>
long long first_violation_parallel(long long count, Pred&& holds, int jobs) {
#ifdef _OPENMP
  const long long block = 1 << 16;
  long long found = -1;
  for (long long lo = 0; lo < count && found < 0; lo += block) {
    const long long hi = lo + block < count ? lo + block : count;
    long long best = hi;
#pragma omp parallel for schedule(static) reduction(min : best) num_threads(effective_jobs(jobs))
    for (long long i = lo; i < hi; ++i)
      if (!holds(i) && i < best) best = i;
    if (best < hi) found = best;
  }
  return found;
#else
  (void)jobs;
  return first_violation_serial(count, holds);
#endif
}

}  // namespace bimlab
