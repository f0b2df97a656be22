#include <cmath>

#include <benchmark/benchmark.h>

#include "fracmont/bounds.hpp"
#include "fracmont/corpus.hpp"
#include "fracmont/identities.hpp"

using namespace fracmont;

namespace {

SingularIntegrand singular_exp(double mu) {
    return {[](double t) { return std::exp(t); }, std::nullopt, mu, 0.0, 1.0};
}

void BM_IntegrateGaussJacobi(benchmark::State& state) {
    QuadratureConfig cfg;
    cfg.scheme = Scheme::gauss_jacobi;
    const auto integrand = singular_exp(-0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(integrand, cfg).value);
}
BENCHMARK(BM_IntegrateGaussJacobi);

void BM_IntegrateAdaptiveGraded(benchmark::State& state) {
    QuadratureConfig cfg;
    cfg.scheme = Scheme::adaptive_graded;
    const auto integrand = singular_exp(-0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(integrand, cfg).value);
}
BENCHMARK(BM_IntegrateAdaptiveGraded);

void BM_OracleRiemann(benchmark::State& state) {
    const auto integrand = singular_exp(-0.5);
    const int panels = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_integrate(integrand, panels));
}
BENCHMARK(BM_OracleRiemann)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_MontgomeryWeighted(benchmark::State& state) {
    const QuadratureConfig cfg;
    const TestFunction f = corpus::lookup_function("runge:4", 0.0, 1.0);
    const WeightFunction w = corpus::lookup_weight("jacobi:0.5", 0.0, 1.0);
    const double alpha = state.range(0) / 100.0;
    const ProblemFrame frame(0.0, 1.0, 0.35, alpha);
    for (auto _ : state)
        benchmark::DoNotOptimize(montgomery_weighted(frame, f, w, cfg).residual);
}
BENCHMARK(BM_MontgomeryWeighted)->Arg(100)->Arg(105)->Arg(150)->Arg(300);

void BM_OstrowskiBound(benchmark::State& state) {
    const QuadratureConfig cfg;
    const TestFunction f = corpus::lookup_function("exp:1", 0.0, 1.0);
    const WeightFunction w = corpus::lookup_weight("bump:0.4,0.35", 0.0, 1.0);
    const ProblemFrame frame(0.0, 1.0, 0.5, 1.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(ostrowski_bound(frame, f, w, cfg).tightness);
}
BENCHMARK(BM_OstrowskiBound);

} // namespace

BENCHMARK_MAIN();
