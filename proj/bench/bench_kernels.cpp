// Timing harness comparing the serial reference kernels against the
// OpenMP paths on fixed workloads (best of three runs each). Results are
// wall-clock only; the test suite separately checks that both paths agree
// exactly.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "padiclie/linalg.hpp"
#include "padiclie/pbw.hpp"
#include "padiclie/runtime.hpp"

using namespace padiclie;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 0;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

PBWElement random_element(std::mt19937_64& gen, const LiePtr& lie, int deg, int support) {
  std::uniform_int_distribution<long> num(-1000, 1000), d(1, deg), b(0, lie->dim() - 1);
  PBWElement out(lie);
  for (int s = 0; s < support; ++s) {
    Mono m(static_cast<std::size_t>(lie->dim()), 0);
    long dd = d(gen);
    for (long i = 0; i < dd; ++i) ++m[static_cast<std::size_t>(b(gen))];
    out.add_term(m, Rat(num(gen)));
  }
  if (out.is_zero()) out = PBWElement::unit(lie);
  return out;
}

void print(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %9.1f ms %9.1f ms   x%.2f\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
  std::printf("%-34s %12s %12s   %s\n", "kernel", "serial", "openmp", "speedup");
  const int reps = 3;

  {
    // batch of independent products: the property-sweep pattern
    ChevalleyPtr g = build_chevalley("A2");
    std::mt19937_64 gen(7);
    std::vector<std::pair<PBWElement, PBWElement>> work;
    for (int i = 0; i < 800; ++i)
      work.emplace_back(random_element(gen, g->lie, 3, 4), random_element(gen, g->lie, 3, 4));
    MultiplyOptions serial_opt;
    serial_opt.serial = true;
    runtime::set_jobs(1);
    double s = best_of(reps, [&] {
      for (auto& [a, b] : work) (void)multiply(a, b, serial_opt);
    });
    runtime::set_jobs(0);
    double par = best_of(reps, [&] {
      const long n = static_cast<long>(work.size());
#pragma omp parallel for schedule(dynamic, 8)
      for (long i = 0; i < n; ++i)
        (void)multiply(work[static_cast<std::size_t>(i)].first,
                       work[static_cast<std::size_t>(i)].second, serial_opt);
    });
    print("product sweep A2 (800 pairs)", s, par);
  }

  {
    // one large product: pair-level parallelism against the shared memo
    // of the serial reference (the memo sharing is what parallel threads
    // give up, so gains only show up on heavy distinct pairs)
    ChevalleyPtr g = build_chevalley("C3");
    std::mt19937_64 gen(11);
    PBWElement a = random_element(gen, g->lie, 4, 48);
    PBWElement b = random_element(gen, g->lie, 4, 48);
    MultiplyOptions pp;
    pp.pair_parallel = true;
    runtime::set_jobs(1);
    double s = best_of(reps, [&] { (void)multiply(a, b); });
    runtime::set_jobs(0);
    double par = best_of(reps, [&] { (void)multiply(a, b, pp); });
    print("pbw-multiply C3 (2300 pairs)", s, par);
  }

  {
    ChevalleyPtr g = build_chevalley("A2");
    runtime::set_jobs(1);
    double s = best_of(reps, [&] { (void)truncated_center(g, 5, 5, 6, 0); });
    runtime::set_jobs(0);
    double par = best_of(reps, [&] { (void)truncated_center(g, 5, 5, 6, 0); });
    print("centre kernel A2 D=5", s, par);
  }

  {
    // exact elimination with parallel row updates; rational entries make
    // the per-row work dominate the scheduling overhead
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<long> e(-50, 50);
    QMatrix m(280, 56);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat c(e(gen), 1 + static_cast<long>((i + j) % 7));
        c.canonicalize();
        m.at(i, j) = c;
      }
    runtime::set_jobs(1);
    double s = best_of(reps, [&] {
      QMatrix m1 = m;
      (void)rref(m1, true);
    });
    runtime::set_jobs(0);
    double par = best_of(reps, [&] {
      QMatrix m2 = m;
      (void)rref(m2, false);
    });
    print("exact rref 280x56 (rational)", s, par);
  }

  return 0;
}
