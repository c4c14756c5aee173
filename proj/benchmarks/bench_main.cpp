#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "gwcpg/cpg.hpp"
#include "gwcpg/gw_exact.hpp"
#include "gwcpg/offspring.hpp"
#include "gwcpg/online_recursion.hpp"

namespace {

// One generation of the Poisson recursion against a geometric-shaped base law.
void BM_PowerRecursion(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> weights(n + 1);
    for (std::size_t j = 0; j <= n; ++j) weights[j] = static_cast<double>(j) * 0.5 * std::pow(0.999, static_cast<double>(j));
    gwcpg::PowerRecursionProblem problem{1.5, 1, weights, std::exp(-1.5), n};
    gwcpg::PowerRecursionOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(gwcpg::solve_power_recursion(problem, options));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_PowerRecursion)->ArgsProduct({{1 << 12, 1 << 14, 1 << 16}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_NegativeBinomialRecursion(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> weights(n + 1);
    for (std::size_t j = 0; j <= n; ++j) weights[j] = static_cast<double>(j) * 0.5 * std::pow(0.999, static_cast<double>(j));
    gwcpg::PowerRecursionProblem problem{1.5, 4, weights, 0.3, n};
    for (auto _ : state) benchmark::DoNotOptimize(gwcpg::solve_power_recursion(problem));
}
BENCHMARK(BM_NegativeBinomialRecursion)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_CpgDensityBatch(benchmark::State& state) {
    const gwcpg::CpgParams p{static_cast<double>(state.range(0)), 1.0, 0.5};
    std::vector<double> xs(10000);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 0.01 * static_cast<double>(i + 1) * p.mean() / 50.0;
    std::vector<double> out(xs.size());
    for (auto _ : state) {
        gwcpg::log_density(p, xs, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_CpgDensityBatch)->Arg(1)->Arg(8)->Arg(200);

void BM_GeometricClosedFormTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gwcpg::geometric_table(1.1, 80, 1'000'000));
}
BENCHMARK(BM_GeometricClosedFormTable)->Unit(benchmark::kMillisecond);

void BM_GenerationStepper(benchmark::State& state) {
    for (auto _ : state) {
        gwcpg::GenerationStepper stepper(gwcpg::OffspringSpec::poisson(1.5), 20000);
        for (int m = 0; m < 12; ++m) stepper.advance();
        benchmark::DoNotOptimize(stepper.current().probs.data());
    }
}
BENCHMARK(BM_GenerationStepper)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
