#include <benchmark/benchmark.h>

#include <random>

#include "gerbe/cohomology.hpp"

namespace {

using namespace gerbe;

void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 gen(1);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(gen);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithRandom)->Arg(4)->Arg(8)->Arg(16);

// delta on normalized 2-cochains of the center of A_r.
void BM_SmithCoboundary(benchmark::State& state) {
  const auto rs = RootSystem::build(Family::A, static_cast<int>(state.range(0)));
  const IntegerMatrix d = coboundary_matrix(center_of(rs), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d));
  state.SetLabel(std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
}
BENCHMARK(BM_SmithCoboundary)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_MinimalLevel(benchmark::State& state) {
  const Family f = static_cast<Family>(state.range(0));
  const auto rs = RootSystem::build(f, static_cast<int>(state.range(1)));
  const auto data = center_data(rs, center_of(rs));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_level(rs, data));
  state.SetLabel(rs.name());
}
BENCHMARK(BM_MinimalLevel)
    ->Args({static_cast<long>(Family::A), 11})
    ->Args({static_cast<long>(Family::D), 8})
    ->Args({static_cast<long>(Family::E7), 7})
    ->Unit(benchmark::kMillisecond);

void BM_LevelSweep(benchmark::State& state) {
  for (auto _ : state) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      for (int r = f == Family::D ? 4 : 2; r <= 9; ++r) {
        const auto rs = RootSystem::build(f, r);
        for (const auto& g : subgroups_of(center_of(rs)))
          benchmark::DoNotOptimize(minimal_level(rs, center_data(rs, g)).k_min);
      }
    }
  }
}
BENCHMARK(BM_LevelSweep)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RtcSweep(benchmark::State& state) {
  const auto rs = RootSystem::build(Family::D, 8);
  const auto data = center_data(rs, center_of(rs));
  const auto rep = minimal_level(rs, data);
  const auto fam = lemma3_extend(rs, data, rep.k_min, rep.u);
  for (auto _ : state) benchmark::DoNotOptimize(verify_rtc(rs, data, rep.k_min, fam).ok);
}
BENCHMARK(BM_RtcSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
