#include <benchmark/benchmark.h>

#include <random>

#include "ergo/ergo.hpp"

namespace {

ergo::BipartiteSystem sample_system(int d1, int d2) {
    return ergo::random_separable(d1, d2, 2 * d1 * d2, 42);
}

void BM_ValidateDensity(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ergo::BipartiteSystem sys = sample_system(2, dim / 2);
    const ergo::Matrix m = sys.rho.matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ergo::DensityMatrix(m));
    }
}
BENCHMARK(BM_ValidateDensity)->Arg(4)->Arg(8)->Arg(12);

void BM_HermitianSpectrum(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ergo::BipartiteSystem sys = sample_system(2, dim / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ergo::hermitian_spectrum(sys.rho));
    }
}
BENCHMARK(BM_HermitianSpectrum)->Arg(4)->Arg(8)->Arg(12);

void BM_ErgotropicGap(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ergo::BipartiteSystem sys = sample_system(d, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ergo::ergotropic_gap(sys));
    }
}
BENCHMARK(BM_ErgotropicGap)->Arg(2)->Arg(3)->Arg(4);

void BM_CertifyEntanglement(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ergo::BipartiteSystem sys = sample_system(d, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ergo::certify_entanglement(sys));
    }
}
BENCHMARK(BM_CertifyEntanglement)->Arg(2)->Arg(3)->Arg(4);

void BM_NielsenKempe(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ergo::BipartiteSystem sys = sample_system(d, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ergo::nielsen_kempe_holds(sys));
    }
}
BENCHMARK(BM_NielsenKempe)->Arg(2)->Arg(3)->Arg(4);

void BM_SeparableSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ergo::oracle::violation_sweep(2, 2, n, 7, ergo::oracle::SweepFamily::Separable));
    }
}
BENCHMARK(BM_SeparableSweep)->Arg(10)->Arg(100);

void BM_DimensionBound(benchmark::State& state) {
    for (auto _ : state) {
        for (int d1 = 2; d1 <= 8; ++d1)
            for (int d2 = d1; d2 <= 8; ++d2)
                benchmark::DoNotOptimize(ergo::dimension_bound_m(d1, d2));
    }
}
BENCHMARK(BM_DimensionBound);

}  // namespace

BENCHMARK_MAIN();
