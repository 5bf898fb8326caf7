#include <benchmark/benchmark.h>

#include <random>

#include "tchains/chain.hpp"
#include "tchains/random_chains.hpp"

namespace {

using namespace tchains;

Chain fixture_chain(int degree, int terms) {
  std::mt19937_64 rng(42);
  const Group f2 = Group::free_group(2);
  return random_chain(rng, f2.ball(4), {.degree = degree, .terms = terms, .coeff_bound = 9});
}

void bm_boundary(benchmark::State& state) {
  const Chain c = fixture_chain(static_cast<int>(state.range(0)), 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary(c));
  }
}
BENCHMARK(bm_boundary)->Arg(2)->Arg(3)->Arg(4);

void bm_convolve(benchmark::State& state) {
  std::mt19937_64 rng(43);
  const Group f2 = Group::free_group(2);
  const auto ball = f2.ball(3);
  const Chain a =
      random_chain(rng, ball, {.degree = 0, .terms = static_cast<int>(state.range(0)), .coeff_bound = 9});
  const Chain b =
      random_chain(rng, ball, {.degree = 0, .terms = static_cast<int>(state.range(0)), .coeff_bound = 9});
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f2, a, b));
  }
}
BENCHMARK(bm_convolve)->Arg(8)->Arg(32);

void bm_weighted_norm(benchmark::State& state) {
  const Group f2 = Group::free_group(2);
  const Chain c = fixture_chain(2, 64);
  const NormSpec spec = NormSpec::polynomial(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_norm(f2, c, spec));
  }
}
BENCHMARK(bm_weighted_norm)->Arg(0)->Arg(3);

}  // namespace
