#include <benchmark/benchmark.h>

#include <jetcurve/sections.hpp>

using namespace jetcurve;

namespace {

void grouped_count(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SectionCount count = count_sections(3, m, 5, false);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(grouped_count)->Arg(100)->Arg(1000)->Arg(10000);

void count_with_breakdown(benchmark::State& state) {
    for (auto _ : state) {
        SectionCount count = count_sections(3, static_cast<int>(state.range(0)), 5, true);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(count_with_breakdown)->Arg(30)->Arg(100);

void composition_counting(benchmark::State& state) {
    for (auto _ : state) {
        Int n = composition_count(4, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(composition_counting)->Arg(1000)->Arg(100000);

void composition_enumeration(benchmark::State& state) {
    for (auto _ : state) {
        long long parts = 0;
        for_each_composition(3, static_cast<int>(state.range(0)),
                             [&](const std::vector<int>& p) {
                                 for (int v : p) parts += v;
                             });
        benchmark::DoNotOptimize(parts);
    }
}
BENCHMARK(composition_enumeration)->Arg(100)->Arg(300);

void quotient_rank_oracle(benchmark::State& state) {
    const Poly2 r = parse_poly("x^4 + y^4 - 2");
    const int delta = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int dim = brute_force_quotient_dim(delta, 4, r);
        benchmark::DoNotOptimize(dim);
    }
}
BENCHMARK(quotient_rank_oracle)->Arg(8)->Arg(16);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
