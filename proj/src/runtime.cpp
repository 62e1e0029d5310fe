#include "padiclie/runtime.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padiclie::runtime {

namespace {
int g_jobs = 0;
}

void set_jobs(int jobs) {
  g_jobs = jobs < 0 ? 0 : jobs;
#ifdef _OPENMP
  // jobs == 0 must undo any earlier cap, otherwise a serial run would pin
  // the process to one thread for good
  omp_set_num_threads(g_jobs > 0 ? g_jobs : omp_get_num_procs());
#endif
}

int jobs() { return g_jobs; }

bool parallel_enabled() {
#ifdef _OPENMP
  return g_jobs != 1;
#else
  return false;
#endif
}

}  // namespace padiclie::runtime
