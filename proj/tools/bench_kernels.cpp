// Serial reference kernels against their OpenMP versions.
// Thread count follows FRL_THREADS / OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "frl/face_ring.hpp"
#include "frl/generators.hpp"
#include "frl/homology.hpp"
#include "frl/koszul.hpp"
#include "frl/moment_angle.hpp"

namespace {

using namespace frl;

const auto Q = Coefficients::rationals();

SimplicialComplex subject(int which) {
  switch (which) {
    case 0: return cyclic_boundary(4, 8);
    case 1: return cyclic_boundary(5, 9);
    default: return torus9();
  }
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(std::string(state.range(1) == 0 ? "serial" : "parallel") + " m=" +
                 std::to_string(subject(static_cast<int>(state.range(0))).num_vertices()));
}

void BM_Hochster(benchmark::State& state) {
  const auto k = subject(static_cast<int>(state.range(0)));
  HochsterOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(k, Q, options));
  label(state);
}

void BM_Koszul(benchmark::State& state) {
  const auto k = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_betti(k, Q, mode(state)));
  label(state);
}

void BM_Cells(benchmark::State& state) {
  const auto k = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zk_bigraded_betti(k, Q, mode(state)));
  label(state);
}

void BM_CohenMacaulay(benchmark::State& state) {
  const auto k = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_cohen_macaulay(k, Q, mode(state)));
  label(state);
}

void grid(benchmark::internal::Benchmark* b) {
  for (int which : {0, 1, 2}) {
    for (int parallel : {0, 1}) b->Args({which, parallel});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Hochster)->Apply(grid);
BENCHMARK(BM_Koszul)->Apply(grid);
BENCHMARK(BM_Cells)->Apply(grid);
BENCHMARK(BM_CohenMacaulay)->Apply(grid);

BENCHMARK_MAIN();
