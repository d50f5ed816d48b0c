#include <benchmark/benchmark.h>

#include <random>

#include "triaut/analysis.hpp"
#include "triaut/random.hpp"
#include "triaut/structure.hpp"

using namespace triaut;

namespace {

AlgebraMode mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? AlgebraMode::Commutative : AlgebraMode::Free;
}

void BM_Mul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto mode = mode_of(state);
  const RandomPolynomialOptions o{mode, 3, static_cast<std::size_t>(state.range(1)), 12,
                                  variable_range(1, 3), true};
  const auto a = random_polynomial(rng, o);
  const auto b = random_polynomial(rng, o);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->ArgsProduct({{0, 1}, {3, 6, 10}});

void BM_Substitute(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto mode = mode_of(state);
  const auto p = random_polynomial(rng, {mode, 3, 5, 10, variable_range(1, 3), true});
  const auto phi = random_unitriangular(rng, mode, 3, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(substitute(p, phi.images()));
}
BENCHMARK(BM_Substitute)->ArgsProduct({{0, 1}, {2, 3}});

void BM_SolveDifference(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto mode = mode_of(state);
  const auto g = random_polynomial(
      rng, {mode, 3, static_cast<std::size_t>(state.range(1)), 8, variable_range(1, 3), true});
  for (auto _ : state) benchmark::DoNotOptimize(solve_difference(g, 1, Scalar(1, 2)));
}
BENCHMARK(BM_SolveDifference)->ArgsProduct({{0, 1}, {3, 6}});

void BM_FreePairCheck(benchmark::State& state) {
  const auto x1 = Polynomial::variable(AlgebraMode::Commutative, 2, 1);
  const auto x2 = Polynomial::variable(AlgebraMode::Commutative, 2, 2);
  const auto f = power(x2, 2) + x2;
  const auto g = power(x1, 2) - x1;
  std::vector<Syllable> syl;
  for (long k = 0; k < state.range(0); ++k) {
    syl.push_back({'a', 2});
    syl.push_back({'b', -1});
  }
  const GroupWord w(syl);
  for (auto _ : state) benchmark::DoNotOptimize(free_pair_check(f, g, w));
}
BENCHMARK(BM_FreePairCheck)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NonlinearityWitness(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinearity_witness(p, 2, p));
}
BENCHMARK(BM_NonlinearityWitness)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
