#include <benchmark/benchmark.h>

#include "cauchy/deformation.hpp"
#include "cauchy/fields.hpp"
#include "cauchy/sampling.hpp"

using namespace cauchy;

static void BM_FlatnessConstant(benchmark::State& state) {
  const auto a = known_example(KnownKind::left_133);
  const auto pts = sample_s3(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flatness_stats(a, pts).max());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FlatnessConstant)->Arg(100)->Arg(1000);

static void BM_FlatnessPolynomial(benchmark::State& state) {
  Sampler s(3);
  std::array<Poly4, 6> p;
  for (auto& e : p) e = s.polynomial<4>(static_cast<int>(state.range(0)));
  const auto exact = SymEnd3Field::from_polynomials(p, Chirality::left);
  const auto a = state.range(1) ? exact.with_finite_difference(1e-5) : exact;
  const auto pts = sample_s3(1, 200);
  for (auto _ : state) benchmark::DoNotOptimize(flatness_stats(a, pts).max());
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_FlatnessPolynomial)->ArgsProduct({{1, 3}, {0, 1}})->ArgNames({"degree", "fd"});

static void BM_DeformationSolutionSpace(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(deformation_solution_space(7, static_cast<int>(state.range(0))).kernel_dimension);
  }
}
BENCHMARK(BM_DeformationSolutionSpace)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
