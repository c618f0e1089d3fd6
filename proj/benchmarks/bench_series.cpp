#include "mathieu/powser.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/series.hpp"
#include "mathieu/zeta.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_direct_sum(benchmark::State& state) {
    mathieu::SeriesParams p;
    p.h = static_cast<double>(state.range(0));
    p.tol = 1e-10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::eval_mathieu_direct(p));
    }
}
BENCHMARK(BM_direct_sum)->Arg(1)->Arg(100)->Arg(10000);

void BM_alternating_sum(benchmark::State& state) {
    mathieu::SeriesParams p;
    p.h = static_cast<double>(state.range(0));
    p.tol = 1e-10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::eval_alternating(p));
    }
}
BENCHMARK(BM_alternating_sum)->Arg(1)->Arg(10000);

void BM_sine_transform_quadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::integral_F(1.0, 1e-9));
    }
}
BENCHMARK(BM_sine_transform_quadrature);

void BM_parts_quadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::integral_F_parts(1.0, 1e-9));
    }
}
BENCHMARK(BM_parts_quadrature);

void BM_zeta(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::zeta_int(s));
    }
}
BENCHMARK(BM_zeta)->Arg(3)->Arg(9);

void BM_small_h_expansion(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::eval_expansion(0.5, 1e-10));
    }
}
BENCHMARK(BM_small_h_expansion);

void BM_exact_numerator_series(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mathieu::fsecond_numerator_series(20));
    }
}
BENCHMARK(BM_exact_numerator_series);

} // namespace

BENCHMARK_MAIN();
