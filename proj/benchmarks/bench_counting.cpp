#include <benchmark/benchmark.h>

#include "succession/counting.hpp"

namespace {

using succession::count_linear;
using succession::count_modular;
using succession::derangement;
using succession::edge_subset_polynomial;
using succession::linear_triangle;

void BM_Derangement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derangement(n));
}
BENCHMARK(BM_Derangement)->Arg(32)->Arg(128)->Arg(512);

void BM_CountLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_linear(n, 3));
}
BENCHMARK(BM_CountLinear)->Arg(16)->Arg(64)->Arg(256);

void BM_CountModular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_modular(n, 3));
}
BENCHMARK(BM_CountModular)->Arg(16)->Arg(64)->Arg(256);

// worst polynomial case: many cycles (k = n/2 gives gcd n/2)
void BM_SubsetPolynomialManyCycles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_subset_polynomial(n, n / 2));
}
BENCHMARK(BM_SubsetPolynomialManyCycles)->Arg(64)->Arg(256);

void BM_LinearTriangle(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(linear_triangle(max_n));
}
BENCHMARK(BM_LinearTriangle)->Arg(16)->Arg(64);

}  // namespace
