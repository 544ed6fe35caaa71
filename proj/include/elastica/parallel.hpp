#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elastica::par {

// Every data-parallel kernel in this library takes an Exec switch and keeps a
// straightforward serial path. Tests pin the OpenMP path against the serial
// reference bit for bit; tools/bench_kernels.cpp compares their throughput.
enum class Exec { serial, parallel };

#ifdef _OPENMP
inline constexpr bool have_openmp = true;
#else
inline constexpr bool have_openmp = false;
#endif

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Apply body(i) for i in [0, n). Iterations must be independent.
template <class F>
void for_index(std::size_t n, F&& body, Exec mode = Exec::parallel) {
  if (mode == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Sum of term(i) over [0, n) with a fixed chunk decomposition, so the
// floating-point result is identical for both Exec modes and for any thread
// count: partial sums are accumulated per chunk in index order, then combined
// in chunk order.
template <class F>
double sum_indexed(std::size_t n, F&& term, Exec mode = Exec::parallel) {
  if (n == 0) return 0.0;
  const std::size_t nchunk = n < 256 ? n : 256;
  std::vector<double> partial(nchunk, 0.0);
  auto chunk_sum = [&](std::size_t c) {
    const std::size_t lo = c * n / nchunk;
    const std::size_t hi = (c + 1) * n / nchunk;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[c] = s;
  };
  for_index(nchunk, chunk_sum, mode);
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace elastica::par
