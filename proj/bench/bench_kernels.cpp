// Serial reference kernels vs the OpenMP-parallel forms on identical inputs.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "polyspace/kernels.hpp"
#include "polyspace/rational.hpp"

using polyspace::Int;
namespace kernels = polyspace::kernels;

namespace {

std::vector<std::int64_t> make_weights(int n) {
  std::mt19937_64 rng(42);
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 997);
  return w;
}

std::int64_t total_of(const std::vector<std::int64_t>& w) {
  std::int64_t t = 0;
  for (auto x : w) t += x;
  return t;
}

void BM_short_histogram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  auto w = make_weights(n);
  auto total = total_of(w);
  for (auto _ : state) {
    auto hist = threads <= 1
                    ? kernels::short_histogram_serial<std::int64_t>(w, total)
                    : kernels::short_histogram_parallel<std::int64_t>(w, total,
                                                                      threads);
    benchmark::DoNotOptimize(hist);
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}

void BM_min_wall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  auto w = make_weights(n);
  auto total = total_of(w);
  for (auto _ : state) {
    auto wall = threads <= 1
                    ? kernels::min_wall_serial<std::int64_t>(w, total)
                    : kernels::min_wall_parallel<std::int64_t>(w, total,
                                                               threads);
    benchmark::DoNotOptimize(wall);
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}

void BM_count_classes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  auto w = make_weights(n);
  auto total = total_of(w);
  for (auto _ : state) {
    auto counts = threads <= 1
                      ? kernels::count_classes_serial<std::int64_t>(w, total)
                      : kernels::count_classes_parallel<std::int64_t>(
                            w, total, threads);
    benchmark::DoNotOptimize(counts);
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}

void BM_sign_window_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  auto w = make_weights(n);
  auto total = total_of(w);
  const std::uint64_t prod_mask = 0b1011;
  const std::int64_t lo = 3, hi = total / 2, base = total + 5;
  for (auto _ : state) {
    auto r = threads <= 1
                 ? kernels::sign_window_sum_serial<std::int64_t>(
                       w, prod_mask, lo, hi, base)
                 : kernels::sign_window_sum_parallel<std::int64_t>(
                       w, prod_mask, lo, hi, base, threads);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}

void BM_short_histogram_bigint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  auto w64 = make_weights(n);
  std::vector<Int> w(w64.begin(), w64.end());
  const Int total = total_of(w64);
  for (auto _ : state) {
    auto hist = threads <= 1
                    ? kernels::short_histogram_serial<Int>(w, total)
                    : kernels::short_histogram_parallel<Int>(w, total,
                                                             threads);
    benchmark::DoNotOptimize(hist);
  }
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}

}  // namespace

BENCHMARK(BM_short_histogram)
    ->Args({20, 1})
    ->Args({20, 4})
    ->Args({22, 1})
    ->Args({22, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_wall)
    ->Args({20, 1})
    ->Args({20, 4})
    ->Args({22, 1})
    ->Args({22, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_classes)
    ->Args({20, 1})
    ->Args({20, 4})
    ->Args({22, 1})
    ->Args({22, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sign_window_sum)
    ->Args({20, 1})
    ->Args({20, 4})
    ->Args({22, 1})
    ->Args({22, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_short_histogram_bigint)
    ->Args({16, 1})
    ->Args({16, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
