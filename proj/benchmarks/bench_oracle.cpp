#include <benchmark/benchmark.h>

#include "bicell/oracle.hpp"

namespace {

void BM_ClassEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bicell::Partition lambda({n});
  std::vector<int> images(n);
  std::int64_t visited = 0;
  for (auto _ : state) {
    for (auto it = bicell::permutations_of_type(n, lambda); !it.done(); it.next()) {
      it.write_images(images);
      ++visited;
    }
    benchmark::DoNotOptimize(images.data());
  }
  state.SetItemsProcessed(visited);
}
BENCHMARK(BM_ClassEnumeration)->DenseRange(7, 9, 1);

void BM_OraclePoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bicell::OracleOptions options{50'000'000, static_cast<unsigned>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(bicell::oracle_poly(n, bicell::Partition({n - 2, 2}), bicell::Partition({n}), true, options));
}
BENCHMARK(BM_OraclePoly)->Args({8, 1})->Args({9, 1})->Args({9, 0})->Unit(benchmark::kMillisecond);

}  // namespace
