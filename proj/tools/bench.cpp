// Times the serial and worker-pool brick-set kernels against each other on
// stable tube tables of growing rank: bare enumeration first, then the full
// radius certification pass.  The two routes must return identical results;
// the tool exits nonzero if they ever differ.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fp/category.hpp"
#include "fp/tube.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int rmax = argc > 1 ? std::atoi(argv[1]) : 8;
  if (rmax < 1 || rmax > 12) {
    std::fprintf(stderr, "usage: %s [max_rank in 1..12]\n", argv[0]);
    return 2;
  }

#ifdef _OPENMP
  std::printf("worker pool: OpenMP, %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("worker pool: compiled without OpenMP, both columns run serial\n");
#endif
  std::printf("%4s %9s %12s %12s %9s %12s %12s\n", "rank", "sets", "enum-ser",
              "enum-par", "speedup", "verify-ser", "verify-par");

  for (int r = 2; r <= rmax; ++r) {
    fp::cat::Data d = fp::tube::export_data(r);

    std::vector<std::vector<int>> serial_sets, parallel_sets;
    double t_es = seconds(
        [&] { serial_sets = fp::cat::brick_sets(d, -1, fp::cat::Mode::serial); });
    double t_ep = seconds(
        [&] { parallel_sets = fp::cat::brick_sets(d, -1, fp::cat::Mode::parallel); });
    if (serial_sets != parallel_sets) {
      std::fprintf(stderr, "rank %d: serial and pooled enumerations differ\n", r);
      return 1;
    }

    fp::tube::Report rs, rp;
    double t_vs =
        seconds([&] { rs = fp::tube::verify(r, fp::default_tol(), fp::cat::Mode::serial); });
    double t_vp =
        seconds([&] { rp = fp::tube::verify(r, fp::default_tol(), fp::cat::Mode::parallel); });
    if (rs.passed != rp.passed || rs.brick_sets != rp.brick_sets) {
      std::fprintf(stderr, "rank %d: serial and pooled verifications differ\n", r);
      return 1;
    }

    std::printf("%4d %9ld %11.4fs %11.4fs %8.2fx %11.4fs %11.4fs\n", r,
                long(serial_sets.size()), t_es, t_ep, t_ep > 0 ? t_es / t_ep : 0.0, t_vs,
                t_vp);
  }
  return 0;
}
