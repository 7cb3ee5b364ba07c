#include <benchmark/benchmark.h>

#include "cospec/io.hpp"
#include "cospec/iso.hpp"
#include "cospec/search.hpp"

namespace {

const cospec::SignedGraph& gm_fixture() {
  static const cospec::SignedGraph g = cospec::parse_graph(
      "8 17\n0 1 +\n0 2 +\n0 5 -\n0 6 +\n1 2 +\n1 3 -\n1 5 +\n1 7 +\n2 3 +\n"
      "2 6 -\n2 7 -\n3 4 -\n3 6 +\n3 7 +\n4 5 +\n4 7 +\n5 6 -\n");
  return g;
}

void bm_find_gm(benchmark::State& state) {
  cospec::SearchLimits limits;
  limits.t_max = static_cast<int>(state.range(0));
  limits.time_budget_secs = 0;
  limits.candidate_cap = 1 << 20;
  for (auto _ : state) benchmark::DoNotOptimize(cospec::find_gm_partitions(gm_fixture(), limits));
}

void bm_find_ggm(benchmark::State& state) {
  cospec::SearchLimits limits;
  limits.time_budget_secs = 0;
  limits.candidate_cap = 1 << 20;
  for (auto _ : state)
    benchmark::DoNotOptimize(cospec::find_ggm_partitions(gm_fixture(), limits));
}

void bm_switch_iso(benchmark::State& state) {
  const auto& g = gm_fixture();
  const cospec::SignedGraph h =
      relabeled(switched(g, {0, 3, 5}), {3, 1, 4, 0, 2, 6, 5, 7});
  for (auto _ : state) benchmark::DoNotOptimize(cospec::are_switching_isomorphic(g, h));
}

}  // namespace

BENCHMARK(bm_find_gm)->Arg(2)->Arg(3);
BENCHMARK(bm_find_ggm);
BENCHMARK(bm_switch_iso);

BENCHMARK_MAIN();
