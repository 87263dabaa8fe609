#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wastefactor/cascade.hpp"
#include "wastefactor/config.hpp"
#include "wastefactor/network.hpp"
#include "wastefactor/radio_link.hpp"

namespace wf = wastefactor;

namespace {

wf::CascadeSpec chain(int n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> g(0.1, 100.0);
  wf::CascadeSpec c;
  for (int i = 0; i < n; ++i) {
    const double gain = g(rng);
    c.stages.push_back({"s", gain, std::max(1.0, 1.0 / gain) + 1.0, 2.0});
  }
  return c;
}

void BM_CascadeWasteFactor(benchmark::State& state) {
  const auto c = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wf::cascade_waste_factor(c));
}
BENCHMARK(BM_CascadeWasteFactor)->Arg(2)->Arg(8)->Arg(64);

void BM_CascadePowerTrace(benchmark::State& state) {
  const auto c = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wf::cascade_power_trace(c));
}
BENCHMARK(BM_CascadePowerTrace)->Arg(2)->Arg(8)->Arg(64);

void BM_EvaluateLink(benchmark::State& state) {
  const auto p = wf::io::radio_preset("142ghz");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wf::evaluate_link(p, 75.0, true, wf::Direction::kUplink, wf::CefMode::kTotal));
  }
}
BENCHMARK(BM_EvaluateLink);

void BM_PsSweep(benchmark::State& state) {
  const auto c = wf::io::default_scenario(wf::SweepParameter::kPsLossDb);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wf::run_sweep(c, threads));
}
BENCHMARK(BM_PsSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
