// Serial reference against the OpenMP kernels on the two heavy sweeps.
#include <benchmark/benchmark.h>

#include "fstirling/fharmonic.hpp"
#include "fstirling/stirling.hpp"
#include "fstirling/verify.hpp"

using namespace fstirling;

namespace {

Exec exec_of(const benchmark::State& state)
{
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_EulerSum(benchmark::State& state)
{
    const FSpec f = parse_fspec("linear:1,0");
    const long N = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_sum_numeric(f, 2, N, EulerMode::harmonic_over_f, exec_of(state)));
    }
    state.SetLabel(to_string(exec_of(state)));
    state.counters["threads"] = available_threads();
}
BENCHMARK(BM_EulerSum)->ArgsProduct({{0, 1}, {2000, 20000}})->Unit(benchmark::kMillisecond);

void BM_OracleSweep(benchmark::State& state)
{
    const FtSetting s(parse_fspec("linear:2,1"), parse_t("symbolic"));
    const long N = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s1_oracle_check(s, N, exec_of(state)));
    }
    state.SetLabel(to_string(exec_of(state)));
}
BENCHMARK(BM_OracleSweep)->ArgsProduct({{0, 1}, {10, 13}})->Unit(benchmark::kMillisecond);

void BM_HarmonicRoutesSuite(benchmark::State& state)
{
    const VerifyConfig c{FtSetting(parse_fspec("linear:2,1"), parse_t("3/2")), state.range(1), exec_of(state), false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite("harmonic-routes", c));
    }
    state.SetLabel(to_string(exec_of(state)));
}
BENCHMARK(BM_HarmonicRoutesSuite)->ArgsProduct({{0, 1}, {8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
