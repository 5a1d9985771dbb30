#include <benchmark/benchmark.h>

#include "hierq/hierarchy.hpp"
#include "hierq/measurement.hpp"
#include "hierq/sweep.hpp"

namespace {

hierq::JointDistribution w_family(std::size_t n, double alpha) {
  const auto rho = hierq::mix_with_maximally_mixed(hierq::pure_to_density(hierq::w_state(n)), alpha);
  return hierq::born_statistics(rho, hierq::computational_basis_projectors());
}

void BM_PairProjectionW(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 100.0;
  const auto p = w_family(3, alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hierq::ipf_project(p, 2));
  }
}
BENCHMARK(BM_PairProjectionW)->Arg(50)->Arg(90)->Arg(99)->Arg(100);

void BM_SpectrumByQubits(benchmark::State& state) {
  const auto p = w_family(static_cast<std::size_t>(state.range(0)), 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hierq::hierarchy_spectrum(p));
  }
}
BENCHMARK(BM_SpectrumByQubits)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_TraceReadout(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = hierq::mix_with_maximally_mixed(hierq::pure_to_density(hierq::ghz_state(n)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hierq::born_statistics(rho, hierq::computational_basis_projectors(), hierq::BornMethod::Trace));
  }
}
BENCHMARK(BM_TraceReadout)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_DefaultSweep(benchmark::State& state) {
  hierq::FamilySpec spec;
  spec.family = state.range(0) == 0 ? hierq::Family::Ghz : hierq::Family::W;
  const auto grid = hierq::default_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hierq::run_sweep(spec, grid));
  }
}
BENCHMARK(BM_DefaultSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
