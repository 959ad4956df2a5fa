// Compares the OpenMP kernels against their serial reference implementations:
// wall time plus a check that the results agree.

#include <chrono>
#include <cstdio>
#include <string>

#include "nilproj/arveson.hpp"
#include "nilproj/rng.hpp"
#include "nilproj/search.hpp"

using namespace nilproj;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

ComplexMatrix random_matrix(int n, uint64_t seed) {
  Xoshiro256pp rng(seed);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(rng.gaussian(), rng.gaussian());
  return m;
}

void bench_corner_profile(int n, int reps) {
  const ComplexMatrix a = random_matrix(n, 42);

  auto t0 = clock_type::now();
  CornerProfile serial;
  for (int i = 0; i < reps; ++i) serial = corner_profile_serial(a);
  const double serial_s = seconds_since(t0) / reps;

  t0 = clock_type::now();
  CornerProfile parallel;
  for (int i = 0; i < reps; ++i) parallel = corner_profile(a);
  const double parallel_s = seconds_since(t0) / reps;

  double diff = 0.0;
  for (int k = 0; k < n; ++k)
    diff = std::max(diff, std::abs(serial.norms[k] - parallel.norms[k]));

  std::printf("corner_profile n=%-3d  serial %8.2f ms  omp %8.2f ms  speedup %.2fx  max|diff| %g\n",
              n, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s, diff);
}

void bench_search(int rank, int dim, int starts, int steps) {
  SearchConfig config;
  config.rank = rank;
  config.dim = dim;
  config.starts = starts;
  config.steps_per_start = steps;

  auto t0 = clock_type::now();
  const SearchResult serial = random_walk_minimize_serial(config);
  const double serial_s = seconds_since(t0);

  t0 = clock_type::now();
  const SearchResult parallel = random_walk_minimize(config);
  const double parallel_s = seconds_since(t0);

  bool identical = serial.best_objective == parallel.best_objective;
  for (size_t s = 0; s < serial.per_start_bests.size() && identical; ++s)
    identical = serial.per_start_bests[s] == parallel.per_start_bests[s];

  std::printf("random_walk (%d,%d) starts=%d steps=%d  serial %7.2f s  omp %7.2f s  speedup %.2fx  identical %s\n",
              rank, dim, starts, steps, serial_s, parallel_s, serial_s / parallel_s,
              identical ? "yes" : "NO");
}

}  // namespace

int main() {
  bench_corner_profile(32, 10);
  bench_corner_profile(64, 3);
  bench_corner_profile(96, 2);
  bench_search(2, 5, 8, 4000);
  bench_search(3, 6, 8, 4000);
  return 0;
}
