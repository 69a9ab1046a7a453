#include <benchmark/benchmark.h>

#include <vector>

#include "qfrac/qfrac.hpp"

using namespace qfrac;

namespace {

void BM_QGamma(benchmark::State& state) {
    const QContext ctx(0.5);
    const double x = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_gamma(ctx, x));
    }
}
BENCHMARK(BM_QGamma)->Arg(5)->Arg(25)->Arg(250);

void BM_QFactorialPowerFractional(benchmark::State& state) {
    const QContext ctx(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_factorial_power(ctx, 2.0, 0.5, 0.7));
    }
}
BENCHMARK(BM_QFactorialPowerFractional);

void BM_JacksonIntegral(benchmark::State& state) {
    const QContext ctx(0.5);
    const GridFunction f = make_polynomial({1.0, 2.0, -0.5, 0.25});
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_integral_from_zero(ctx, f, 1.0));
    }
}
BENCHMARK(BM_JacksonIntegral);

void BM_FractionalIntegral(benchmark::State& state) {
    const QContext ctx(0.5);
    const GridFunction f = make_polynomial({1.0, 2.0, -0.5, 0.25});
    const double alpha = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(riemann_q_integral_frac(ctx, f, 0.0, alpha, 1.0));
    }
}
BENCHMARK(BM_FractionalIntegral)->Arg(5)->Arg(15)->Arg(25);

void BM_CaputoDerivative(benchmark::State& state) {
    const QContext ctx(0.5);
    const GridFunction f = make_polynomial({1.0, 2.0, -0.5, 0.25});
    const double alpha = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(caputo_q_derivative(ctx, f, 0.0, alpha, 1.0));
    }
}
BENCHMARK(BM_CaputoDerivative)->Arg(5)->Arg(15);

void BM_MLDouble(benchmark::State& state) {
    const QContext ctx(0.5);
    const MLDoubleParams p{0.5, 1.0, 0.2, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ml_double_eval(ctx, p, 1.0));
    }
}
BENCHMARK(BM_MLDouble);

void BM_GMLFixedPartialSum(benchmark::State& state) {
    const QContext ctx(0.5);
    const GMLParams p{0.5, 2.0, 0.5, 1.0, 0.0, 0};
    const long k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gml_eval(ctx, p, 1.0, EvalMode::fixed(k)));
    }
}
BENCHMARK(BM_GMLFixedPartialSum)->Arg(5)->Arg(20);

void BM_ClosedFormSeries(benchmark::State& state) {
    const QContext ctx(0.5);
    const IVPSpec spec(0.5, -0.25, 0.0, 0.2, {1.0});
    const long k_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_series(ctx, spec, k_max));
    }
}
BENCHMARK(BM_ClosedFormSeries)->Arg(12)->Arg(60);

void BM_SuccessiveApproximation(benchmark::State& state) {
    const QContext ctx(0.5);
    const IVPSpec spec(0.5, -0.25, 0.0, 0.2, {1.0});
    const long m = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(successive_approximation(ctx, spec, m));
    }
}
BENCHMARK(BM_SuccessiveApproximation)->Arg(4)->Arg(12);

void BM_NumericResidual(benchmark::State& state) {
    const QContext ctx(0.5);
    const IVPSpec spec(0.5, -0.25, 0.0, 0.2, {1.0});
    const FormalQSeries series = closed_form_series(ctx, spec, 60);
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_residual(ctx, spec, series, 1.0));
    }
}
BENCHMARK(BM_NumericResidual);

void BM_SuiteCase(benchmark::State& state) {
    const QContext ctx(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(ctx, "ftc", 42, 1));
    }
}
BENCHMARK(BM_SuiteCase);

} // namespace

BENCHMARK_MAIN();
