#include <benchmark/benchmark.h>

#include "bicell/characters.hpp"
#include "bicell/partition.hpp"

namespace {

using bicell::Partition;

// The cache is global, so only the first iteration pays for the recursion.
void BM_MnCharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shapes = bicell::partitions_of(n);
  for (auto _ : state)
    for (const auto& lambda : shapes)
      for (const auto& mu : shapes) benchmark::DoNotOptimize(bicell::mn_character(lambda, mu));
  state.counters["entries"] = static_cast<double>(shapes.size() * shapes.size());
}
BENCHMARK(BM_MnCharacterTable)->DenseRange(8, 16, 4);

void BM_FaceTypeClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shapes = bicell::partitions_of(n);
  for (auto _ : state)
    for (const auto& lambda : shapes) benchmark::DoNotOptimize(bicell::chi_face_type(lambda, 3, n));
}
BENCHMARK(BM_FaceTypeClosedForm)->DenseRange(8, 16, 4);

void BM_Dimension(benchmark::State& state) {
  const auto shapes = bicell::partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& lambda : shapes) benchmark::DoNotOptimize(bicell::dimension(lambda));
}
BENCHMARK(BM_Dimension)->Arg(20);

}  // namespace
