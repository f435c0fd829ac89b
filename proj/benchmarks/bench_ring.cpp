#include "cohocalc/dsl.hpp"
#include "cohocalc/grr_lambda.hpp"
#include "cohocalc/ring.hpp"
#include "cohocalc/scenarios.hpp"
#include "cohocalc/spaces.hpp"
#include "cohocalc/verlinde.hpp"

#include <benchmark/benchmark.h>

using namespace cohocalc;

namespace {

void BM_QuinticPower(benchmark::State& state) {
    SpacePtr wbar = wbar_ring();
    Element unit = Rational(-4) * wbar->cls("theta") + Rational(2) * wbar->cls("pi") -
                   Rational(7) * wbar->cls("rho") - wbar->cls("zeta");
    for (auto _ : state) {
        Element q = pow(unit, 5);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_QuinticPower);

void BM_IntegrateTop(benchmark::State& state) {
    SpacePtr wbar = wbar_ring();
    Element q = pow(Rational(-4) * wbar->cls("theta") + Rational(2) * wbar->cls("pi") -
                        Rational(7) * wbar->cls("rho") - wbar->cls("zeta"),
                    5);
    for (auto _ : state) {
        Rational v = integrate(q);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_IntegrateTop);

void BM_RingConstruction(benchmark::State& state) {
    SpacePtr base = jac_x_curve_ring(2, 1, false);
    Element c1 = Rational(4) * base->cls("rho");
    for (auto _ : state) {
        SpacePtr bundle = proj_bundle_ring(base, {c1}, 3, "z");
        benchmark::DoNotOptimize(bundle);
    }
}
BENCHMARK(BM_RingConstruction);

void BM_LambdaGrr(benchmark::State& state) {
    for (auto _ : state) {
        LambdaResult r = lambda_grr(2, 1, {2, -3});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_LambdaGrr);

void BM_Bernoulli20(benchmark::State& state) {
    for (auto _ : state) {
        Rational b = bernoulli(20);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_Bernoulli20);

void BM_ReproN1(benchmark::State& state) {
    for (auto _ : state) {
        Report r = repro("n1");
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ReproN1);

void BM_DslEval(benchmark::State& state) {
    const char* text = "space wbar();\n"
                       "eval integrate((-4*theta + 2*pi - 7*rho - zeta)^5);\n";
    for (auto _ : state) {
        Report r = eval_program(parse(text));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DslEval);

} // namespace

BENCHMARK_MAIN();
