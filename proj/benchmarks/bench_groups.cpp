#include <benchmark/benchmark.h>

#include "tchains/group.hpp"

namespace {

void bm_free_ball(benchmark::State& state) {
  const tchains::Group f2 = tchains::Group::free_group(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2.ball(state.range(0)));
  }
}
BENCHMARK(bm_free_ball)->Arg(4)->Arg(6)->Arg(8);

void bm_abelian_ball(benchmark::State& state) {
  const tchains::Group z2 = tchains::Group::free_abelian(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(z2.ball(state.range(0)));
  }
}
BENCHMARK(bm_abelian_ball)->Arg(8)->Arg(16);

void bm_free_distance(benchmark::State& state) {
  const tchains::Group f2 = tchains::Group::free_group(2);
  const auto ball = f2.ball(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = ball[i % ball.size()];
    const auto& y = ball[(i * 7 + 3) % ball.size()];
    benchmark::DoNotOptimize(f2.distance(x, y));
    ++i;
  }
}
BENCHMARK(bm_free_distance)->Arg(6);

}  // namespace
