#include <benchmark/benchmark.h>

#include <random>

#include "tchains/combing.hpp"
#include "tchains/linalg.hpp"
#include "tchains/random_chains.hpp"

namespace {

using namespace tchains;

void bm_contracting_homotopy(benchmark::State& state) {
  std::mt19937_64 rng(44);
  const Combing comb = Combing::free_prefix(2);
  const Chain c = random_chain(comb.group().ball(4), rng, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(contracting_homotopy(comb, c, false));
  }
}

void bm_norm_profile(benchmark::State& state) {
  const Combing comb = Combing::free_prefix(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(homotopy_norm_profile(comb, 1, 1, state.range(0), 2));
  }
}
BENCHMARK(bm_norm_profile)->Arg(4)->Arg(5);

void bm_rank(benchmark::State& state) {
  std::mt19937_64 rng(45);
  const long long n = state.range(0);
  RatMatrix m(n, n);
  for (long long k = 0; k < n * n / 3; ++k) {
    m.set(static_cast<long long>(rng() % n), static_cast<long long>(rng() % n),
          Rat(static_cast<long>(rng() % 17) - 8));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(bm_rank)->Arg(32)->Arg(64);

}  // namespace
