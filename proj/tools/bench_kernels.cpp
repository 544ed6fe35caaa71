// Microbenchmark for the data-parallel kernels: closed-form curve sampling,
// self-intersection counting, and energy quadrature, timed with the serial
// reference against the OpenMP path.

#include <chrono>
#include <cstdio>

#include "elastica/classify.hpp"
#include "elastica/curve.hpp"
#include "elastica/energy.hpp"
#include "elastica/parallel.hpp"

using namespace elastica;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_per_call(int reps, const std::function<void()>& fn) {
  fn();  // warm up
  const auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.3f ms | openmp %10.3f ms | speedup %.2fx\n",
              name, serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d (openmp %s)\n", par::max_threads(),
              par::have_openmp ? "enabled" : "unavailable");

  const classify::ProblemParams p(0.5, 1.0);
  const auto loop = classify::build_critical_point(p, classify::Family::loop, 1);

  const int n_sample = 200000;
  const double ts_sample = seconds_per_call(3, [&] {
    curve::sample_curve(loop, n_sample, false, par::Exec::serial);
  });
  const double tp_sample = seconds_per_call(3, [&] {
    curve::sample_curve(loop, n_sample, false, par::Exec::parallel);
  });
  report("sample_curve N=200k", ts_sample, tp_sample);

  const auto poly = curve::sample_curve(loop, 6000);
  const double ts_inter = seconds_per_call(3, [&] {
    curve::self_intersections(poly, par::Exec::serial);
  });
  const double tp_inter = seconds_per_call(3, [&] {
    curve::self_intersections(poly, par::Exec::parallel);
  });
  report("self_intersections M=6k", ts_inter, tp_inter);

  const auto fine = curve::sample_curve(loop, 1 << 20);
  const double ts_quad = seconds_per_call(5, [&] {
    energy::discrete_energy(fine, p.lambda, par::Exec::serial);
  });
  const double tp_quad = seconds_per_call(5, [&] {
    energy::discrete_energy(fine, p.lambda, par::Exec::parallel);
  });
  report("discrete_energy N=2^20", ts_quad, tp_quad);

  return 0;
}
