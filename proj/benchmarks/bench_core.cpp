#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "udw/analysis.hpp"
#include "udw/measures.hpp"
#include "udw/model.hpp"
#include "udw/numerics.hpp"
#include "udw/sweep.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

udw::ComplexMatrix random_hermitian4(unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  udw::ComplexMatrix m(4);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = normal(gen);
    for (int j = i + 1; j < 4; ++j) {
      const udw::Complex z{normal(gen), normal(gen)};
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

void BM_hermitian_eigenvalues_4x4(benchmark::State& state) {
  const udw::ComplexMatrix m = random_hermitian4(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(udw::hermitian_eigenvalues(m));
  }
}
BENCHMARK(BM_hermitian_eigenvalues_4x4);

void BM_apply_channel(benchmark::State& state) {
  const udw::ComplexMatrix rho = udw::initial_state({kPi / 4.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(udw::apply_channel(rho, {0.5, 0.04}));
  }
}
BENCHMARK(BM_apply_channel);

void BM_measure_all_xstate(benchmark::State& state) {
  const udw::ComplexMatrix rho =
      udw::final_state_closed_form(kPi / 4.0, {0.5, 0.04});
  for (auto _ : state) {
    benchmark::DoNotOptimize(udw::measure_all(rho));
  }
}
BENCHMARK(BM_measure_all_xstate);

void BM_concurrence_general(benchmark::State& state) {
  const udw::ComplexMatrix rho =
      udw::final_state_closed_form(kPi / 3.0, {0.7, 0.05});
  for (auto _ : state) {
    benchmark::DoNotOptimize(udw::concurrence_general(rho));
  }
}
BENCHMARK(BM_concurrence_general);

void BM_trace_norm_numeric(benchmark::State& state) {
  const udw::ComplexMatrix rho =
      udw::final_state_closed_form(kPi / 4.0, {0.5, 0.04});
  for (auto _ : state) {
    benchmark::DoNotOptimize(udw::trace_norm_coherence_numeric(rho, 1e-6));
  }
}
BENCHMARK(BM_trace_norm_numeric)->Unit(benchmark::kMillisecond);

void BM_sweep_q_200(benchmark::State& state) {
  udw::SweepConfig config;
  config.theta = kPi / 4.0;
  config.nu2 = 0.01;
  config.min = 0.0;
  config.max = 0.999;
  config.steps = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(udw::sweep_q(config));
  }
}
BENCHMARK(BM_sweep_q_200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
