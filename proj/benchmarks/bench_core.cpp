#include <benchmark/benchmark.h>

#include "asdc/chow.hpp"
#include "asdc/complex.hpp"
#include "asdc/intersection.hpp"
#include "asdc/invariants.hpp"
#include "asdc/threshold.hpp"

namespace {

asdc::LengthVector bench_lengths(int n) {
    // Odd total, so no subset can reach half of it: always generic.
    std::vector<mpq_class> lens(static_cast<std::size_t>(n), mpq_class(2));
    lens.back() = 1;
    return asdc::LengthVector(std::move(lens));
}

void BM_ShortComplex(benchmark::State& state) {
    const auto l = bench_lengths(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(asdc::short_complex(l));
}
BENCHMARK(BM_ShortComplex)->Arg(6)->Arg(8);

void BM_EnumerateAsd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(asdc::enumerate_asd(n, asdc::EnumerationMode::labeled));
}
BENCHMARK(BM_EnumerateAsd)->Arg(4)->Arg(5);

void BM_Poincare(benchmark::State& state) {
    const auto k = asdc::pn_complex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(asdc::poincare_polynomial(k));
}
BENCHMARK(BM_Poincare)->Arg(9);

void BM_RealizeThreshold(benchmark::State& state) {
    const auto k = asdc::short_complex(bench_lengths(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(asdc::realize_threshold(k));
}
BENCHMARK(BM_RealizeThreshold)->Arg(5)->Arg(6);

void BM_PsiProductRing(benchmark::State& state) {
    const auto k = asdc::pn_complex(7);
    const asdc::PsiMonomial d{{4, 0, 0, 0, 0, 0, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(asdc::intersection_ring(k, d));
}
BENCHMARK(BM_PsiProductRing);

void BM_PsiTableRecursion(benchmark::State& state) {
    const auto k = asdc::pn_complex(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(asdc::intersection_table(k, asdc::PsiMethod::recursion));
}
BENCHMARK(BM_PsiTableRecursion)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
