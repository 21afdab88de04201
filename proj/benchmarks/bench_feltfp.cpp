#include <benchmark/benchmark.h>

#include "feltfp/axioms.hpp"
#include "feltfp/contraction.hpp"
#include "feltfp/oracle.hpp"
#include "feltfp/solver.hpp"

using namespace feltfp;

namespace {

FeltSpace three_point() {
    return FeltSpace::finite({{0, 0.5, 1}, {0.5, 0, 1}, {1, 1, 0}});
}

void BM_DistanceFinite(benchmark::State& state) {
    const auto space = three_point();
    const Point a = Point::at_index(0), b = Point::at_index(2);
    for (auto _ : state) benchmark::DoNotOptimize(space.distance(a, b));
}
BENCHMARK(BM_DistanceFinite);

void BM_DistanceContinuous(benchmark::State& state) {
    const auto space = make_builtin_space("euclid:0,1");
    const Point a = Point::at(0.2), b = Point::at(0.9);
    for (auto _ : state) benchmark::DoNotOptimize(space.distance(a, b));
}
BENCHMARK(BM_DistanceContinuous);

void BM_PicardCosine(benchmark::State& state) {
    const auto space = make_builtin_space("euclid:0,1");
    const auto cosmap = make_builtin_map("cos", space);
    for (auto _ : state) {
        auto trace = picard_orbit(space, cosmap, Point::at(0.0));
        benchmark::DoNotOptimize(trace.points.size());
    }
}
BENCHMARK(BM_PicardCosine);

void BM_Condition3Finite(benchmark::State& state) {
    const auto space = three_point();
    const auto swap = SelfMap::table({1, 0, 2});
    for (auto _ : state) benchmark::DoNotOptimize(check_condition3_finite(space, swap).pass());
}
BENCHMARK(BM_Condition3Finite);

void BM_FeltContinuityFinite(benchmark::State& state) {
    // n^3 triple scan per epsilon level
    const auto space = make_builtin_space("discrete:4");
    const std::vector<double> epsilons = {0.25, 0.5, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_felt_continuity(space, epsilons).size());
}
BENCHMARK(BM_FeltContinuityFinite);

void BM_StressTheorem(benchmark::State& state) {
    EnumerationConfig cfg;
    cfg.n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto sum = stress_theorem(cfg);
        benchmark::DoNotOptimize(sum.cases_total);
    }
    state.SetLabel(std::to_string(stress_theorem(cfg).cases_total) + " cases");
}
BENCHMARK(BM_StressTheorem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FuzzEquivalence(benchmark::State& state) {
    EnumerationConfig cfg;
    cfg.n = 3;
    cfg.trials = static_cast<std::size_t>(state.range(0));
    cfg.seed = 42;
    for (auto _ : state) {
        auto sum = fuzz_equivalence(cfg);
        benchmark::DoNotOptimize(sum.cases_total);
    }
}
BENCHMARK(BM_FuzzEquivalence)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SampledBandCheck(benchmark::State& state) {
    const auto space = make_builtin_space("maxpm:0,2");
    const auto half = make_builtin_map("half", space);
    for (auto _ : state) {
        auto res = check_condition3_sampled(space, half, {0.5, 1.0}, {1.0, 0.5, 0.25});
        benchmark::DoNotOptimize(res.pass());
    }
}
BENCHMARK(BM_SampledBandCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
