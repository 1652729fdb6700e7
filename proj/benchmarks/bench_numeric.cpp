#include <benchmark/benchmark.h>

#include <jetcurve/numeric_eval.hpp>

using namespace jetcurve;

namespace {

const CurveSpec& quartic() {
    static const CurveSpec c = validate_curve(parse_poly("x^4 + y^4 - 2"));
    return c;
}

void parse_and_validate(benchmark::State& state) {
    for (auto _ : state) {
        CurveSpec c = validate_curve(parse_poly("x^6 + 2*x^3*y^2 + y^6 - 4"));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(parse_and_validate);

void solve_graph_disc(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeriesPoint s = local_graph_series(quartic(), Rational(1), Rational(1), Side::y_side, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(solve_graph_disc)->Arg(4)->Arg(8);

void evaluate_expression(benchmark::State& state) {
    const int kappa = static_cast<int>(state.range(0));
    const SeriesPoint s =
        local_graph_series(quartic(), Rational(1), Rational(1), Side::y_side, kappa);
    const JetExpression& e = generate(kappa).left;
    for (auto _ : state) {
        Rational v = eval_jet_expression(e, s);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(evaluate_expression)->Arg(2)->Arg(4)->Arg(6);

void chain_rule_residual(benchmark::State& state) {
    const SeriesPoint s = local_graph_series(quartic(), Rational(1), Rational(1), Side::y_side, 6);
    for (auto _ : state) {
        Rational worst = max_faa_residual(s);
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(chain_rule_residual);

void two_sided_agreement(benchmark::State& state) {
    const EvalConfig cfg;
    const int kappa = static_cast<int>(state.range(0));
    for (auto _ : state) {
        AgreementReport rep = check_generator_agreement(kappa, quartic(), Rational(1), Rational(1), cfg);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(two_sided_agreement)->Arg(2)->Arg(4);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
