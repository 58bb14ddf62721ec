#include <benchmark/benchmark.h>

#include "bicell/charsum.hpp"
#include "bicell/closed_form.hpp"

namespace {

bicell::BicellularInstance instance(int n) { return {n, 2, bicell::Partition({n - 3, 3})}; }

void BM_PolyClosed(benchmark::State& state) {
  const auto inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicell::poly_closed(inst));
}
BENCHMARK(BM_PolyClosed)->DenseRange(8, 20, 4);

void BM_PolyCharsum(benchmark::State& state) {
  const auto inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicell::poly_charsum(inst.n(), inst.face_type(), inst.mu()));
}
BENCHMARK(BM_PolyCharsum)->DenseRange(8, 20, 4);

void BM_PolyRegular(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bicell::poly_regular(2, k, 3));
}
BENCHMARK(BM_PolyRegular)->DenseRange(3, 7, 2);

}  // namespace
