#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "newton_mellin/fourier.hpp"
#include "newton_mellin/mellin.hpp"
#include "newton_mellin/newton.hpp"
#include "newton_mellin/oracle/bessel_mellin.hpp"
#include "newton_mellin/oracle/convolution.hpp"
#include "newton_mellin/oracle/laurent.hpp"
#include "newton_mellin/sampling.hpp"

using namespace nm;

static void BM_StaircaseHull(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Point> points;
    while (points.size() < static_cast<std::size_t>(state.range(0))) {
        const auto batch = random_point_set(rng);
        points.insert(points.end(), batch.begin(), batch.end());
    }
    for (auto _ : state) benchmark::DoNotOptimize(staircase_hull(points));
}
BENCHMARK(BM_StaircaseHull)->Arg(16)->Arg(256)->Arg(4096);

static void BM_Minkowski(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto p1 = staircase_hull(random_point_set(rng, 12));
    const auto p2 = staircase_hull(random_point_set(rng, 12));
    for (auto _ : state) benchmark::DoNotOptimize(minkowski(p1, p2));
}
BENCHMARK(BM_Minkowski);

static void BM_TheoremCheck(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<std::pair<Expansion, Expansion>> pairs;
    for (int i = 0; i < 64; ++i) pairs.emplace_back(random_fiber_expansion(rng), random_fiber_expansion(rng));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(fourier::theorem_check(a, b));
    }
}
BENCHMARK(BM_TheoremCheck);

static void BM_MellinTable(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto e = random_fiber_expansion(rng);
    for (auto _ : state) benchmark::DoNotOptimize(mellin_coefficients(e));
}
BENCHMARK(BM_MellinTable);

static void BM_LaurentExtraction(benchmark::State& state) {
    const auto e = Exponent::make(Rational(-1, 3), 1, 2);
    const LogPolynomial p({{0, 1.0}, {2, Complex{0.5, -1.0}}});
    const auto probe = oracle::default_probe(e, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::numeric_mellin_laurent(e, p, 1, 2, probe));
}
BENCHMARK(BM_LaurentExtraction)->Unit(benchmark::kMillisecond);

static void BM_BesselMellin(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle::bessel_mellin_check({-0.875, 0.3}, 0));
}
BENCHMARK(BM_BesselMellin)->Unit(benchmark::kMillisecond);

static void BM_Convolution(benchmark::State& state) {
    const std::vector<Complex> s{Complex{0.05, 0.0}};
    for (auto _ : state) benchmark::DoNotOptimize(oracle::ts_convolution({2}, {3}, s));
}
BENCHMARK(BM_Convolution)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
