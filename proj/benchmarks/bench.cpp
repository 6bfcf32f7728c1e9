// Microbenchmarks for the hot paths: the bracket, interval construction
// (certification included), the gauge action, bch in the five-generator
// algebra, and the staged Maurer-Cartan solver.

#include <benchmark/benchmark.h>

#include "lsk/groupoid.hpp"
#include "lsk/interval.hpp"
#include "lsk/series.hpp"

namespace {

void bm_bracket(benchmark::State& state) {
    auto iv = lsk::build_interval(static_cast<int>(state.range(0)));
    auto u = lsk::gauge(iv.ctx, iv.x, iv.b);
    auto v = lsk::apply_diff(iv.ctx, iv.x);
    for (auto _ : state) benchmark::DoNotOptimize(lsk::bracket(u, v));
}
BENCHMARK(bm_bracket)->Arg(6)->Arg(8);

void bm_build_interval(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lsk::build_interval(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_build_interval)->Arg(4)->Arg(6)->Arg(8);

void bm_gauge(benchmark::State& state) {
    auto iv = lsk::build_interval(static_cast<int>(state.range(0)));
    auto y = lsk::rat(5, 2) * iv.x;
    for (auto _ : state) benchmark::DoNotOptimize(lsk::gauge(iv.ctx, y, iv.b));
}
BENCHMARK(bm_gauge)->Arg(6)->Arg(8);

void bm_bch_subdivision(benchmark::State& state) {
    auto sub = lsk::build_subdivision(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lsk::bch(sub.x1, sub.x2));
}
BENCHMARK(bm_bch_subdivision)->Arg(4)->Arg(6);

void bm_solve_mc(benchmark::State& state) {
    auto iv = lsk::build_interval(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(lsk::solve_mc(iv, lsk::rat(1, 3), lsk::rat(2, 3)));
}
BENCHMARK(bm_solve_mc)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
