#include "rauzy4/automaton.hpp"
#include "rauzy4/boundary.hpp"
#include "rauzy4/equality.hpp"
#include "rauzy4/greedy.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/zalpha.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rauzy4;

void BM_mul_alpha(benchmark::State& state) {
    ZAlphaInt v{3, -7, 11, 5};
    for (auto _ : state) {
        v = mul_alpha(v);
        v = mul_alpha_inv(v);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_mul_alpha);

void BM_step(benchmark::State& state) {
    ZAlphaInt A{0, 0, 1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(step(A, 1, 0));
    }
}
BENCHMARK(BM_step);

void BM_check_equal(benchmark::State& state) {
    PairWord p{{4, {}, {1, 1, 0, 0}}, {1, {1, 0, 0}, {1, 0}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_equal(p));
    }
}
BENCHMARK(BM_check_equal);

void BM_greedy_expand(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_expand("3.14159265358979", 32));
    }
}
BENCHMARK(BM_greedy_expand);

void BM_boundary_piece(benchmark::State& state) {
    RootData roots = compute_roots(128);
    ZAlphaInt u{1, 0, 0, 0};
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(boundary_piece(u, depth, roots));
    }
}
BENCHMARK(BM_boundary_piece)->Arg(6)->Arg(10)->Arg(14);

void BM_central_tile(benchmark::State& state) {
    RootData roots = compute_roots(128);
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(central_tile(depth, roots));
    }
}
BENCHMARK(BM_central_tile)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
