// Serial reference vs. OpenMP kernels. Run with --benchmark_filter=... as usual;
// the second range argument is the thread count (1 selects the serial path).

#include <benchmark/benchmark.h>

#include "parity_board/qseries.hpp"
#include "parity_board/sweep.hpp"
#include "parity_board/verify.hpp"

using namespace parity_board;

static void BM_SCoefficientsSerial(benchmark::State& state)
{
    const Int order = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(S_coefficients_serial(6, 12, order));
}
BENCHMARK(BM_SCoefficientsSerial)->Arg(30)->Arg(60);

static void BM_SCoefficientsParallel(benchmark::State& state)
{
    const Int order = state.range(0);
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(S_coefficients(6, 12, order, jobs));
}
BENCHMARK(BM_SCoefficientsParallel)->Args({30, 2})->Args({60, 2})->Args({60, 4});

static void BM_VerifyPhi(benchmark::State& state)
{
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_bijection_phi(3, 4, 12, jobs));
}
BENCHMARK(BM_VerifyPhi)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_VerifyIota(benchmark::State& state)
{
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_iota(20, jobs));
}
BENCHMARK(BM_VerifyIota)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem34(benchmark::State& state)
{
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem34(-3, 3, 8, 30, jobs));
}
BENCHMARK(BM_VerifyTheorem34)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
