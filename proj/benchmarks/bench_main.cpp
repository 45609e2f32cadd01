#include <benchmark/benchmark.h>

#include "steinberg/steinberg.hpp"

using namespace steinberg;

namespace {

Series series_of(std::int64_t code) { return code == 0 ? Series::A : code == 1 ? Series::B : Series::G; }

void BM_WeylCharacter(benchmark::State& state) {
  const auto rs = build_root_system(series_of(state.range(0)), 2);
  const Weight lambda{state.range(1), state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(detail::freudenthal_character(rs, lambda));
}
BENCHMARK(BM_WeylCharacter)->ArgsProduct({{0, 1, 2}, {4, 12, 24}});

void BM_SteinbergTensor(benchmark::State& state) {
  const Group g(Series::G, 2);
  const std::int64_t p = state.range(0);
  const Character st = steinberg_char(g, p);
  const Character twisted = frobenius_twist(g.weyl_character(Weight{2, 2}), 1, p);
  for (auto _ : state) benchmark::DoNotOptimize(tensor(st, twisted));
}
BENCHMARK(BM_SteinbergTensor)->Arg(2)->Arg(3)->Arg(5);

void BM_CharToClass(benchmark::State& state) {
  const Group g(Series::B, 2);
  const Character chi = tensor(tensor(g.weyl_character(Weight{3, 2}), g.weyl_character(Weight{2, 3})),
                               g.weyl_character(Weight{1, 1}));
  for (auto _ : state) {
    if (state.range(0) == 0)
      benchmark::DoNotOptimize(char_to_class(g, chi));
    else
      benchmark::DoNotOptimize(char_to_class_peeling(g, chi));
  }
}
BENCHMARK(BM_CharToClass)->Arg(0)->Arg(1);

void BM_BlockDecompose(benchmark::State& state) {
  const Group g(Series::A, 2, LatticeMode::adjoint);
  KElement c;
  for (std::int64_t a = 0; a <= 30; a += 3)
    for (std::int64_t b = 0; b <= 30; b += 3) c.add(Weight{a, b}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(block_decompose(g, c, 5));
}
BENCHMARK(BM_BlockDecompose);

}  // namespace
BENCHMARK_MAIN();
