#include "bimlab/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bimlab {

int effective_jobs(int jobs) {
#ifdef _OPENMP
  int hw = omp_get_max_threads();
  if (jobs <= 0) return hw;
  return jobs < hw ? jobs : hw;
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace bimlab
