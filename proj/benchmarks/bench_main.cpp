#include <benchmark/benchmark.h>

#include <complex>

#include "entrap/bound_state.hpp"
#include "entrap/dynamics.hpp"
#include "entrap/entanglement.hpp"
#include "entrap/spectra.hpp"

using namespace entrap;

static void BM_KernelSuperOhmic(benchmark::State& state) {
    const auto spec = SpectralDensity::super_ohmic(0.2, 3.0);
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(memory_kernel(spec, s));
        s += 0.01;
    }
}
BENCHMARK(BM_KernelSuperOhmic);

// Negative-frequency correction: panel sums + Wynn.
static void BM_KernelLorentzian(benchmark::State& state) {
    const auto spec = SpectralDensity::lorentzian(3.0, static_cast<double>(state.range(0)));
    double s = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(memory_kernel(spec, s));
        s = s > 100.0 ? 0.1 : s * 1.1;
    }
}
BENCHMARK(BM_KernelLorentzian)->Arg(1)->Arg(15);

static void BM_FindBoundState(benchmark::State& state) {
    const auto spec = SpectralDensity::super_ohmic(0.2, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(find_bound_state(spec));
}
BENCHMARK(BM_FindBoundState)->Unit(benchmark::kMillisecond);

// O(N²) history sum; N = t_max / h.
static void BM_SolveAmplitude(benchmark::State& state) {
    const auto spec = SpectralDensity::super_ohmic(0.2, 3.0);
    const double h = 0.01;
    const double t_max = static_cast<double>(state.range(0)) * h;
    for (auto _ : state) benchmark::DoNotOptimize(solve_amplitude(spec, t_max, h));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveAmplitude)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

static void BM_ConcurrenceClosedForm(benchmark::State& state) {
    const auto st = InitialState::from_alpha(0.7);
    double p = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence_from_amplitude(p, st));
        p = p >= 1.0 ? 0.0 : p + 1e-3;
    }
}
BENCHMARK(BM_ConcurrenceClosedForm);

static void BM_ConcurrenceWootters(benchmark::State& state) {
    const auto st = InitialState::from_alpha(0.7);
    const std::complex<double> c0(0.5, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence(two_qubit_state(st, c0)));
}
BENCHMARK(BM_ConcurrenceWootters);
BENCHMARK_MAIN();
