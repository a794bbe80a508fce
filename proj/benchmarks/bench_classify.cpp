#include <benchmark/benchmark.h>

#include "powfrac/poly_algebra.hpp"

using namespace powfrac;

static void BM_Classify(benchmark::State& state, const char* text) {
    const auto p = poly::IntPolynomial::parse(text);
    for (auto _ : state) benchmark::DoNotOptimize(poly::classify(p, state.range(0)));
}
BENCHMARK_CAPTURE(BM_Classify, cubic_pv, "z^3-z-1")->Arg(128)->Arg(1024);
BENCHMARK_CAPTURE(BM_Classify, lehmer, "z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1")->Arg(128)->Arg(1024);

static void BM_UnitCircleCounts(benchmark::State& state) {
    const auto p = poly::IntPolynomial::parse("z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1");
    for (auto _ : state) benchmark::DoNotOptimize(poly::unit_circle_counts(p));
}
BENCHMARK(BM_UnitCircleCounts);
