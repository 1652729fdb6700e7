#include <benchmark/benchmark.h>

#include <jetcurve/generator.hpp>
#include <jetcurve/render.hpp>

using namespace jetcurve;

namespace {

// One step of the construction: total differentiation followed by the
// rewrite of the foreign first derivative.  generate() memoizes, so the
// repeated work is benchmarked through its public building blocks.
void derivative_step(benchmark::State& state) {
    const JetExpression& e = generate(static_cast<int>(state.range(0))).left;
    for (auto _ : state) {
        JetExpression next = substitute_foreign_first_order(total_derivative(e));
        benchmark::DoNotOptimize(next);
    }
}
BENCHMARK(derivative_step)->DenseRange(1, 5);

void mirror_expression(benchmark::State& state) {
    const JetExpression& e = generate(static_cast<int>(state.range(0))).left;
    for (auto _ : state) {
        JetExpression m = mirror(e);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(mirror_expression)->DenseRange(2, 6);

void composite_derivative(benchmark::State& state) {
    for (auto _ : state) {
        auto terms = faa_di_bruno(static_cast<int>(state.range(0)), 2);
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(composite_derivative)->DenseRange(4, 7);

void trivialization(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TrivializationMap m = trivialization_change(order);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(trivialization)->DenseRange(2, 5);

void render_pair(benchmark::State& state) {
    const GeneratorPair& g = generate(6);
    for (auto _ : state) {
        std::string text = to_display_string(g);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(render_pair);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
