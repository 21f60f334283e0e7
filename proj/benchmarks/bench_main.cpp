#include <benchmark/benchmark.h>

#include "tak/chebyshev.hpp"
#include "tak/roots.hpp"
#include "tak/solver.hpp"
#include "tak/twisted_alexander.hpp"

namespace {

void BM_DeltaB3(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto pres = tak::presentation(tak::TwoBridgeKnot::b3(n));
    const auto ws = tak::solve_b3(n, tak::Mode::Monic);
    const auto& c = std::get<tak::TraceCoordsPlus>(ws.front().coords);
    const auto rep = tak::Representation::from_xz(c.x, c.z);
    for (auto _ : state) benchmark::DoNotOptimize(tak::twisted_alexander(pres, rep));
}
BENCHMARK(BM_DeltaB3)->DenseRange(1, 5);

void BM_FoxDerivative(benchmark::State& state) {
    const auto w = tak::two_bridge_word(tak::TwoBridgeKnot::b3(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(tak::relator_derivative(w, tak::Generator::A));
}
BENCHMARK(BM_FoxDerivative)->Arg(1)->Arg(5)->Arg(10);

void BM_RootsH1(benchmark::State& state) {
    const auto h = tak::h1_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tak::roots(h));
}
BENCHMARK(BM_RootsH1)->Arg(5)->Arg(10)->Arg(20);

void BM_RepresentationsAt(benchmark::State& state) {
    const auto pres = tak::presentation(tak::TwoBridgeKnot::b3(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(tak::representations_at(pres, tak::Complex(0.3, 0.7)));
}
BENCHMARK(BM_RepresentationsAt)->Arg(1)->Arg(3)->Arg(5);

void BM_Census(benchmark::State& state) {
    const auto family = static_cast<tak::Family>(state.range(0));
    const int lo = family == tak::Family::B3 ? 1 : 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(tak::census(family, lo, 8, {tak::Mode::Deficient, tak::Mode::Monic}));
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
