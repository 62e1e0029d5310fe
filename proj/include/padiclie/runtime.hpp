#ifndef PADICLIE_RUNTIME_HPP
#define PADICLIE_RUNTIME_HPP

namespace padiclie::runtime {

/// Parallelism switch shared by every OpenMP kernel. jobs == 1 forces the
/// serial paths everywhere; jobs == 0 leaves the OpenMP default. Exact
/// arithmetic means serial and parallel paths must agree bit for bit; the
/// test suite enforces that.
void set_jobs(int jobs);
int jobs();
bool parallel_enabled();

}  // namespace padiclie::runtime

#endif
