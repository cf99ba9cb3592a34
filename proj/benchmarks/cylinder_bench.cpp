#include <cmath>

#include <benchmark/benchmark.h>

#include "cauchy/cylinder.hpp"

using namespace cauchy;

static void BM_IntegrateForward(benchmark::State& state) {
  IntegratorOptions opt;
  opt.rtol = opt.atol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    const auto p = integrate(Direction::forward, IntegrationBound::until_t(3.0), opt);
    benchmark::DoNotOptimize(p.nodes().size());
  }
}
BENCHMARK(BM_IntegrateForward)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_IntegrateToSingularity(benchmark::State& state) {
  for (auto _ : state) {
    const auto p = integrate(Direction::backward, IntegrationBound::until_t(-1.0));
    benchmark::DoNotOptimize(p.t_end());
  }
}
BENCHMARK(BM_IntegrateToSingularity)->Unit(benchmark::kMicrosecond);

static void BM_TimeOfS(benchmark::State& state) {
  double s = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_of_s(s));
    s = s > 5.0 ? 0.6 : s + 0.01;
  }
}
BENCHMARK(BM_TimeOfS);

static void BM_Ricci4d(benchmark::State& state) {
  const CylinderJet j = closed_form_jet(1.7);
  for (auto _ : state) benchmark::DoNotOptimize(ricci_4d(j));
}
BENCHMARK(BM_Ricci4d);
