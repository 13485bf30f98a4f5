#include <benchmark/benchmark.h>

#include "symscat/propagate.hpp"
#include "symscat/smatrix.hpp"
#include "symscat/spectral.hpp"
#include "symscat/szego.hpp"

namespace {

using namespace symscat;

void BM_Integrate(benchmark::State& state) {
  const auto pot = validate(SquareWell{2.0, 1.0});
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trace = integrate(pot, Energy(1.0), cplx(1.0), cplx(0.0), steps);
    benchmark::DoNotOptimize(trace.psi.back());
  }
  state.SetComplexityN(steps);
}
BENCHMARK(BM_Integrate)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_SmatrixViaTransfer(benchmark::State& state) {
  const auto pot = validate(SquareWell{2.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(smatrix_via_transfer(pot, Energy(1.0)));
}
BENCHMARK(BM_SmatrixViaTransfer);

void BM_SineKernelEigs(benchmark::State& state) {
  const KernelSpec spec{Parity::kEven, 3.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sine_kernel_eigs(spec));
}
BENCHMARK(BM_SineKernelEigs)->Arg(64)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

// Small alpha stays in double; alpha near pi/2 forces the multiprecision ladder.
void BM_ToeplitzLogDet(benchmark::State& state) {
  const ArcSymbol symbol{state.range(1) / 1000.0};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_log_det(symbol, n));
}
BENCHMARK(BM_ToeplitzLogDet)
    ->Args({16, 100})
    ->Args({64, 100})
    ->Args({16, 1571})
    ->Args({32, 1571})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
