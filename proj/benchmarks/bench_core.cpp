#include <benchmark/benchmark.h>

#include <random>

#include "biclique/alphan.hpp"
#include "biclique/chromatic.hpp"
#include "biclique/matchings.hpp"
#include "biclique/oracle.hpp"

using namespace biclique;

namespace {

BicliqueSpec random_spec(int j, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<ComplementEdge> edges;
  for (int l = 0; l < j; ++l)
    for (int r = 0; r < k; ++r)
      if (coin(rng)) edges.emplace_back(l, r);
  return BicliqueSpec(j, k, std::move(edges));
}

void BM_MatchingNumbers(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const BicliqueSpec spec = random_spec(side, 2 * side, 1);
  for (auto _ : state) benchmark::DoNotOptimize(matching_numbers(spec));
}
BENCHMARK(BM_MatchingNumbers)->DenseRange(4, 16, 4);

void BM_ChromaticPolynomial(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const BicliqueSpec spec = random_spec(side, 2 * side, 2);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(spec));
}
BENCHMARK(BM_ChromaticPolynomial)->DenseRange(4, 16, 4);

void BM_DeletionContraction(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SimpleGraph g = to_simple_graph(random_spec(order / 2, order - order / 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::chromatic_poly_bruteforce(g));
}
BENCHMARK(BM_DeletionContraction)->DenseRange(6, 12, 2);

void BM_AlphaPlusN(benchmark::State& state) {
  const long a0 = state.range(0);
  const IntPoly q{a0, -a0 / 2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(alpha_plus_n(q));
}
BENCHMARK(BM_AlphaPlusN)->Arg(1)->Arg(1000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
