#include <benchmark/benchmark.h>

#include <cmath>

#include "planeq/bipartite.hpp"
#include "planeq/circle_quant.hpp"
#include "planeq/dynamics.hpp"
#include "planeq/measurement.hpp"
#include "planeq/sphere_quant.hpp"

namespace {

void BM_QuantizeQuadrature(benchmark::State& state) {
    const planeq::CircleFunction f([](double p) { return std::exp(std::sin(2 * p)); });
    const planeq::QuantizerConfig cfg{0.8, 0.3, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(planeq::quantize(f, cfg));
    }
}
BENCHMARK(BM_QuantizeQuadrature)->Arg(256)->Arg(1024)->Arg(4096);

void BM_LindbladIntegrate(benchmark::State& state) {
    const planeq::LindbladParams params{0.4, 0.0, 0.7,
                                        planeq::EnergyProfile::constant(1.0)};
    const double t1 = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            planeq::lindblad_integrate(1.0, 0.2, params, 0.0, t1, 1e-3));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(t1 / 1e-3));
}
BENCHMARK(BM_LindbladIntegrate)->Arg(1)->Arg(5);

void BM_ViolationScan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            planeq::violation_scan(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ViolationScan)->Arg(128)->Arg(512);

void BM_QuantizeSphere(benchmark::State& state) {
    const planeq::SphereFunction f(
        [](double t, double p) { return std::cos(t) + std::sin(t) * std::cos(p); });
    const int n = static_cast<int>(state.range(0));
    const planeq::SphereGrid grid{n, 2 * n};
    for (auto _ : state) {
        benchmark::DoNotOptimize(planeq::quantize_s2(f, 0.9, grid));
    }
}
BENCHMARK(BM_QuantizeSphere)->Arg(16)->Arg(32)->Arg(64);

void BM_SampleOutcomes(benchmark::State& state) {
    const planeq::MeasurementSetup setup{0.4, 0.2, 1.1, 0.0};
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(planeq::sample_outcomes(setup, 0.9, n, 42));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SampleOutcomes)->Arg(10000)->Arg(100000);

void BM_Correlation(benchmark::State& state) {
    const planeq::Vec4 singlet = planeq::bell_states().psi_minus;
    double a = 0.0;
    for (auto _ : state) {
        a += 1e-3;
        benchmark::DoNotOptimize(planeq::correlation(singlet, a, 0.7));
    }
}
BENCHMARK(BM_Correlation);

}  // namespace

BENCHMARK_MAIN();
