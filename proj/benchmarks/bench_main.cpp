// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "skycov/analysis.hpp"
#include "skycov/montecarlo.hpp"
#include "skycov/toeplitz.hpp"

namespace {

void BM_ToeplitzEntries(benchmark::State& state) {
  const skycov::SystemParams p = skycov::default_params();
  const auto ctx = skycov::make_context(p, skycov::UserKind::Aerial, 300.0,
                                        skycov::LinkClass::los(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(skycov::toeplitz_entries(ctx));
  }
}
BENCHMARK(BM_ToeplitzEntries)->Unit(benchmark::kMillisecond);

void BM_Recursion(benchmark::State& state) {
  std::vector<double> t(static_cast<std::size_t>(state.range(0)), 0.01);
  t[0] = -1.0;
  for (auto _ : state) benchmark::DoNotOptimize(skycov::conditional_scdp(t));
}
BENCHMARK(BM_Recursion)->Arg(32)->Arg(96);

void BM_DenseExponential(benchmark::State& state) {
  std::vector<double> t(static_cast<std::size_t>(state.range(0)), 0.01);
  t[0] = -1.0;
  for (auto _ : state) benchmark::DoNotOptimize(skycov::toeplitz_exp_l1_norm(t));
}
BENCHMARK(BM_DenseExponential)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_ScdpGround(benchmark::State& state) {
  const skycov::SystemParams p = skycov::default_params();
  for (auto _ : state) benchmark::DoNotOptimize(skycov::scdp_gu(p));
}
BENCHMARK(BM_ScdpGround)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_ScdpAerial(benchmark::State& state) {
  const skycov::SystemParams p = skycov::default_params();
  for (auto _ : state) benchmark::DoNotOptimize(skycov::scdp_au(p));
}
BENCHMARK(BM_ScdpAerial)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SimulateGainLevel(benchmark::State& state) {
  const skycov::SystemParams p = skycov::default_params();
  skycov::McConfig mc;
  mc.n_deployments = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(skycov::simulate_sir(p, mc, skycov::UserKind::Aerial));
  }
}
BENCHMARK(BM_SimulateGainLevel)->Unit(benchmark::kMillisecond);

void BM_SimulateFullPhysical(benchmark::State& state) {
  const skycov::SystemParams p = skycov::default_params();
  skycov::McConfig mc;
  mc.n_deployments = 200;
  mc.fidelity = skycov::Fidelity::FullPhysical;
  mc.scheme = state.range(0) == 0 ? skycov::Scheme::CB : skycov::Scheme::ZF;
  for (auto _ : state) {
    benchmark::DoNotOptimize(skycov::simulate_sir(p, mc, skycov::UserKind::Aerial));
  }
}
BENCHMARK(BM_SimulateFullPhysical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
