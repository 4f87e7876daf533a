#include <benchmark/benchmark.h>

#include "bps/bigpoly.hpp"
#include "bps/koszul.hpp"
#include "bps/lenvec.hpp"
#include "bps/resolution.hpp"
#include "bps/syzord.hpp"

namespace {

bps::LengthVector equilateral(int r) {
  return bps::LengthVector(std::vector<bps::Rational>(r, bps::Rational(1)));
}

void BM_ChamberEnumeration(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bps::enumerate_chambers(r, r + 1));
}
BENCHMARK(BM_ChamberEnumeration)->Arg(4)->Arg(5)->Arg(6);

void BM_KoszulResolution(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const bps::GradedPresentation p =
      bps::koszul_syzygy_presentation(1, bps::KoszulData{r, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(bps::minimal_free_resolution(p, r + 2));
}
BENCHMARK(BM_KoszulResolution)->Arg(3)->Arg(4);

void BM_KoszulSyzygyOrder(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const bps::GradedPresentation p =
      bps::koszul_syzygy_presentation(1, bps::KoszulData{r, 1});
  for (auto _ : state) benchmark::DoNotOptimize(bps::syzygy_order(p));
}
BENCHMARK(BM_KoszulSyzygyOrder)->Arg(3)->Arg(4);

void BM_HtSyzygyOrder(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const bps::LengthVector l = equilateral(r);
  for (auto _ : state) benchmark::DoNotOptimize(bps::ht_syzygy_order(l, 1));
}
BENCHMARK(BM_HtSyzygyOrder)->Arg(3)->Arg(5);

void BM_PairingMatrix(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const bps::SpaceParams p(1, 1, equilateral(r));
  for (auto _ : state) benchmark::DoNotOptimize(bps::pairing_matrix(p));
}
BENCHMARK(BM_PairingMatrix)->Arg(5)->Arg(7);

void BM_EquivariantSeries(benchmark::State& state) {
  const bps::SpaceParams p(1, 1, equilateral(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(bps::equivariant_hilbert_series(p));
}
BENCHMARK(BM_EquivariantSeries)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
