#include <benchmark/benchmark.h>

#include <vector>

#include "citemetric/random.hpp"
#include "citemetric/stats.hpp"

namespace {

std::vector<double> lognormal_column(std::size_t n, std::uint64_t seed) {
  citemetric::rng::Xoshiro256ss g(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = citemetric::rng::lognormal(g, 3.0, 1.8);
  return v;
}

void BM_Summarize(benchmark::State& state) {
  const auto xs = lognormal_column(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    auto s = citemetric::stats::summarize(xs, "x");
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.range(0) * state.iterations());
}
BENCHMARK(BM_Summarize)->Arg(1'000)->Arg(100'000);

void BM_Pearson(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = lognormal_column(n, 2);
  const auto ys = lognormal_column(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(citemetric::stats::pearson(xs, ys));
  }
  state.SetItemsProcessed(state.range(0) * state.iterations());
}
BENCHMARK(BM_Pearson)->Arg(1'000)->Arg(100'000);

void BM_Histogram(benchmark::State& state) {
  citemetric::rng::Xoshiro256ss g(4);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (auto& x : xs) x = citemetric::rng::beta(g, 9.0, 1.4);
  for (auto _ : state) {
    auto h = citemetric::stats::histogram(xs, 0.0, 1.0, 50);
    benchmark::DoNotOptimize(h);
  }
  state.SetItemsProcessed(state.range(0) * state.iterations());
}
BENCHMARK(BM_Histogram)->Arg(100'000);

void BM_Binomial(benchmark::State& state) {
  citemetric::rng::Xoshiro256ss g(5);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(citemetric::rng::binomial(g, n, 0.87));
  }
}
BENCHMARK(BM_Binomial)->Arg(10)->Arg(1'000)->Arg(100'000);

}  // namespace
