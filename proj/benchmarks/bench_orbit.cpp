#include <benchmark/benchmark.h>

#include "powfrac/orbit.hpp"

using namespace powfrac;

static void BM_OrbitGolden(benchmark::State& state) {
    const auto base = poly::IntPolynomial::parse("z^2-z-1");
    const auto a = poly::classify(base);
    orbit::OrbitConfig cfg;
    cfg.horizon = state.range(0);
    for (auto _ : state) {
        long last = 0;
        orbit::iterate(field::FieldElement::from_rational(base, 1), a, cfg,
                       [&](const orbit::OrbitSample& s) { last = s.n; });
        benchmark::DoNotOptimize(last);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OrbitGolden)->Arg(1000)->Arg(10000);

static void BM_OrbitLehmer(benchmark::State& state) {
    const auto base = poly::IntPolynomial::parse("z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1");
    const auto a = poly::classify(base);
    orbit::OrbitConfig cfg;
    cfg.horizon = state.range(0);
    for (auto _ : state) {
        long last = 0;
        orbit::iterate(field::FieldElement::from_rational(base, 1), a, cfg,
                       [&](const orbit::OrbitSample& s) { last = s.n; });
        benchmark::DoNotOptimize(last);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OrbitLehmer)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_OrbitRationalAdaptive(benchmark::State& state) {
    const auto base = poly::IntPolynomial::parse("2z-3");
    const auto a = poly::classify(base);
    orbit::OrbitConfig cfg;
    cfg.horizon = state.range(0);
    cfg.force_adaptive = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit::iterate(field::FieldElement::from_rational(base, 1), a, cfg));
    }
}
BENCHMARK(BM_OrbitRationalAdaptive)->Arg(300)->Arg(2000);
