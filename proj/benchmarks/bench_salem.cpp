#include <benchmark/benchmark.h>

#include "powfrac/salem.hpp"

using namespace powfrac;

static void BM_Kronecker(benchmark::State& state) {
    const auto base = poly::IntPolynomial::parse("z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1");
    const auto ctx =
        salem::build_context(poly::classify(base), field::FieldElement::from_rational(base, 1), 128);
    const double tol = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(salem::kronecker_search(ctx, {1, 1, 1, 1}, tol, 1000000));
}
BENCHMARK(BM_Kronecker)->Arg(15)->Arg(10)->Unit(benchmark::kMillisecond);
