// Serial reference vs the OpenMP suite runner on the built-in grid.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "exthyp/suite.hpp"

namespace {

const std::vector<exthyp::IdentityCase>& cases() {
  static const auto suite = exthyp::builtin_suite(exthyp::VariantSelection::both);
  return suite;
}

void BM_SuiteSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exthyp::run_suite_serial(cases(), {}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases().size()));
}

void BM_SuiteParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exthyp::run_suite(cases(), {}, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases().size()));
}

void thread_counts(benchmark::internal::Benchmark* b) {
  for (int j = 1; j <= omp_get_num_procs(); j *= 2) b->Arg(j);
  if ((omp_get_num_procs() & (omp_get_num_procs() - 1)) != 0) b->Arg(omp_get_num_procs());
}

void BM_SuiteTightTolerance(benchmark::State& state) {
  const exthyp::Tolerances tol{1e-13, 1e-16, 14, 20000};
  for (auto _ : state) benchmark::DoNotOptimize(exthyp::run_suite(cases(), tol, 0));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteTightTolerance)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
