#include <benchmark/benchmark.h>

#include "bookcoh/homotopy.hpp"
#include "bookcoh/random.hpp"

using namespace bookcoh;

static void BM_schouten(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(1);
    PolyMultivector a = random_multivector(rng, n, 2, 4, 4);
    PolyMultivector b = random_multivector(rng, n, 2, 4, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(schouten(a, b));
}
BENCHMARK(BM_schouten)->DenseRange(2, 5, 1);

static void BM_book_differential(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(2);
    PolyMultivector mu = random_multivector(rng, n, 2, 4, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(book_differential(mu));
}
BENCHMARK(BM_book_differential)->DenseRange(2, 5, 1);

static void BM_wedge(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(3);
    PolyMultivector a = random_multivector(rng, n, 1, 4, 6);
    PolyMultivector b = random_multivector(rng, n, 2, 4, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge)->DenseRange(2, 5, 1);

static void BM_book_homotopy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(4);
    PolyMultivector mu = random_multivector(rng, n, 2, 6, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(homotopy_book(mu));
}
BENCHMARK(BM_book_homotopy)->DenseRange(2, 5, 1);
