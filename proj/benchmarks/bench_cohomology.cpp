#include <benchmark/benchmark.h>

#include "bookcoh/cohomology.hpp"
#include "bookcoh/random.hpp"

using namespace bookcoh;

static void BM_dimension_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_dims(n, n));
}
BENCHMARK(BM_dimension_table)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_build_slice(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ComplexSlice(n, 2, 3));
}
BENCHMARK(BM_build_slice)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_slice_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ComplexSlice slice(n, 2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(slice.matrix().rank());
}
BENCHMARK(BM_slice_rank)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_reduce_mod_euler(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(7);
    PolyMultivector w(n, 2);
    for (const IndexPair& p : enumerate_pairs(2, 3, n, false)) {
        Polynomial coeff(n, 1);
        for (int e : p.I.entries())
            coeff = coeff * Polynomial::variable_u(n, e);
        w += PolyMultivector(GeneratorWord{false, p.J}, coeff) * rng.rational();
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_mod_euler(w));
}
BENCHMARK(BM_reduce_mod_euler)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_classify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(8);
    PolyMultivector mu(n, 2);
    for (const PolyMultivector& b : basis_cocycles(n, 2))
        mu += b * rng.rational();
    mu += book_differential(random_multivector(rng, n, 1, 3, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(mu));
}
BENCHMARK(BM_classify)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
