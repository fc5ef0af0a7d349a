// Serial reference kernel against the OpenMP kernel on the same inputs.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "arith/kernels.hpp"
#include "arith/numerics.hpp"

namespace {

using arith::Complex;
using arith::Rational;

template <class T>
std::vector<T> random_values(std::int64_t n, unsigned seed);

template <>
std::vector<Rational> random_values(std::int64_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(arith::rational(num(rng), den(rng)));
  return out;
}

template <>
std::vector<Complex> random_values(std::int64_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.emplace_back(dist(rng), dist(rng));
  return out;
}

template <class T, bool Parallel>
void BM_Convolve(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::vector<T> a = random_values<T>(n, 1);
  const std::vector<T> b = random_values<T>(n, 2);
  std::vector<T> out(static_cast<std::size_t>(n));
  for (auto _ : state) {
    if constexpr (Parallel) {
      arith::kernels::convolve_parallel<T>(a, b, out);
    } else {
      arith::kernels::convolve_serial<T>(a, b, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = Parallel ? arith::kernels::max_threads() : 1;
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_Convolve<Complex, false>)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve<Complex, true>)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Convolve<Rational, false>)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve<Rational, true>)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
