// Serial against OpenMP kernels on cyclic groups with the trivial star.
#include <benchmark/benchmark.h>

#include "mla/cocycle.hpp"
#include "mla/kernels.hpp"

namespace {

mla::AlgebraPtr cyclic(int n) {
  std::vector<mla::Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return mla::make_mla(std::move(mul), mla::trivial_star(n));
}

template <bool Parallel>
void star_axioms(benchmark::State& state) {
  const auto a = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? mla::kernels::parallel::star_axioms(*a) : mla::kernels::serial::star_axioms(*a);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void cocycle_identities(benchmark::State& state) {
  const auto k = cyclic(static_cast<int>(state.range(0)));
  const auto h = cyclic(2);
  const auto c = mla::trivial_triple(k, h, mla::trivial_gamma(k->order(), 2));
  for (auto _ : state) {
    auto r = Parallel ? mla::kernels::parallel::cocycle_identities(c.view())
                      : mla::kernels::serial::cocycle_identities(c.view());
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(star_axioms<false>)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(star_axioms<true>)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(cocycle_identities<false>)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(cocycle_identities<true>)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
