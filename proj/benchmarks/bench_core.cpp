#include <benchmark/benchmark.h>

#include <memory>

#include "qfock/catalog.hpp"
#include "qfock/inner_product.hpp"
#include "qfock/q_combinatorics.hpp"
#include "qfock/tk_basis.hpp"
#include "qfock/wick.hpp"

using namespace qfock;

static void BM_QBinomial(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(8)->Arg(16)->Arg(32);

static void BM_Gram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const FockSpace space(SpaceConfig{2, n, Scalar(1, 10)});
    benchmark::DoNotOptimize(space.gram(n));
  }
}
BENCHMARK(BM_Gram)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ComputeTk(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const FockSpace space(SpaceConfig{2, k, Scalar(-1, 10)});
  (void)space.gram(k);
  for (auto _ : state) benchmark::DoNotOptimize(compute_tk(k, space));
}
BENCHMARK(BM_ComputeTk)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CatalogExpand(benchmark::State& state) {
  auto space = std::make_shared<const FockSpace>(SpaceConfig{2, 8, Scalar(1, 10)});
  const auto cat = RadulescuCatalog::build(space);
  FockVector x;
  for (const auto& w : all_words(8, 2)) x.add(w, Scalar(static_cast<long>(w.index(2) % 5) - 2));
  for (auto _ : state) benchmark::DoNotOptimize(cat->expand(x));
}
BENCHMARK(BM_CatalogExpand)->Unit(benchmark::kMillisecond);

static void BM_WickOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpaceConfig cfg{2, 6, Scalar(1, 7)};
  for (auto _ : state) benchmark::DoNotOptimize(wick_operator(Word::repeat(0, n), cfg));
}
BENCHMARK(BM_WickOperator)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
