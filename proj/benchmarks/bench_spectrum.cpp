#include <benchmark/benchmark.h>

#include <cstdint>

#include "cospec/matrix.hpp"
#include "cospec/spectrum.hpp"

namespace {

// xorshift; good enough for benchmark inputs and fully deterministic
std::uint64_t next(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

cospec::IntMatrix random_symmetric(int n, std::uint64_t seed) {
  std::uint64_t s = seed + 0x9e3779b97f4a7c15ull;
  cospec::IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = static_cast<int>(next(s) % 3) - 1;
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

void bm_char_poly(benchmark::State& state) {
  const auto a = random_symmetric(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(cospec::char_poly(a));
}

void bm_char_poly_oracle(benchmark::State& state) {
  const auto a = random_symmetric(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(cospec::char_poly_oracle(a));
}

}  // namespace

BENCHMARK(bm_char_poly)->Arg(8)->Arg(14)->Arg(24)->Arg(32);
BENCHMARK(bm_char_poly_oracle)->Arg(6)->Arg(7)->Arg(8);

BENCHMARK_MAIN();
