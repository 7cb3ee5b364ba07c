#include <benchmark/benchmark.h>

#include "cospec/ggm.hpp"
#include "cospec/gm.hpp"
#include "cospec/search.hpp"

namespace {

void bm_gm_validate(benchmark::State& state) {
  cospec::GMGenParams params;
  params.part_sizes = {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  params.d_size = 3;
  const auto [g, pi] = cospec::generate_gm_instance(7, params);
  for (auto _ : state) benchmark::DoNotOptimize(cospec::validate_gm(g, pi));
}

void bm_gm_switch(benchmark::State& state) {
  cospec::GMGenParams params;
  params.part_sizes = {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  params.d_size = 3;
  const auto [g, pi] = cospec::generate_gm_instance(7, params);
  for (auto _ : state) benchmark::DoNotOptimize(cospec::gm_switch(g, pi));
}

void bm_gm_conjugation(benchmark::State& state) {
  cospec::GMGenParams params;
  params.part_sizes = {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  params.d_size = 3;
  const auto [g, pi] = cospec::generate_gm_instance(7, params);
  for (auto _ : state) benchmark::DoNotOptimize(cospec::verify_conjugation_gm(g, pi));
}

void bm_ggm_conjugation(benchmark::State& state) {
  cospec::GGMGenParams params;
  params.m = static_cast<int>(state.range(0));
  params.d_size = 4;
  const auto [g, p] = cospec::generate_ggm_instance(11, params);
  for (auto _ : state) benchmark::DoNotOptimize(cospec::verify_conjugation_ggm(g, p));
}

}  // namespace

BENCHMARK(bm_gm_validate)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_gm_switch)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_gm_conjugation)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_ggm_conjugation)->Arg(3)->Arg(5)->Arg(8);

BENCHMARK_MAIN();
