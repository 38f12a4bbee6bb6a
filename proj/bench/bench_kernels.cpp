// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gdeutsch/kernels.hpp"

using namespace gdeutsch;

namespace {

void BM_OutcomeProbabilitiesSerial(benchmark::State& state) {
  auto rng = substream(1, 0);
  const auto f = sample_uniform(static_cast<std::uint32_t>(state.range(0)), 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::outcome_probabilities(f));
}

void BM_OutcomeProbabilitiesOmp(benchmark::State& state) {
  auto rng = substream(1, 0);
  const auto f = sample_uniform(static_cast<std::uint32_t>(state.range(0)), 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::outcome_probabilities(f));
}

void BM_HistogramSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::square_sum_histogram(n, 4, 1u << 30));
}

void BM_HistogramOmp(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::square_sum_histogram(n, 4, 1u << 30));
}

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::profile_census(9, 4, 1u << 30));
}

void BM_CensusOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::profile_census(9, 4, 1u << 30));
}

void BM_TrialsSerial(benchmark::State& state) {
  const ExperimentConfig config{4, 3, 2, static_cast<std::uint64_t>(state.range(0)), 42};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::simulate_trials(config));
}

void BM_TrialsOmp(benchmark::State& state) {
  const ExperimentConfig config{4, 3, 2, static_cast<std::uint64_t>(state.range(0)), 42};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::simulate_trials(config));
}

}  // namespace

BENCHMARK(BM_OutcomeProbabilitiesSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_OutcomeProbabilitiesOmp)->Arg(64)->Arg(256);
BENCHMARK(BM_HistogramSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramOmp)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsSerial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsOmp)->Arg(100'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
