#include <benchmark/benchmark.h>

#include "succession/enumeration.hpp"
#include "succession/problem.hpp"

namespace {

using succession::count_by_enumeration;
using succession::enumerate_avoiders;
using succession::EnumerationConfig;
using succession::ShiftProblem;
using succession::Variant;

void BM_CountByEnumerationModular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnumerationConfig config{ShiftProblem(n, 2, Variant::modular), 11, {}};
  for (auto _ : state) benchmark::DoNotOptimize(count_by_enumeration(config));
}
BENCHMARK(BM_CountByEnumerationModular)->Arg(7)->Arg(8)->Arg(9)->Arg(10)
    ->Unit(benchmark::kMillisecond);

void BM_CountByEnumerationLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnumerationConfig config{ShiftProblem(n, 2, Variant::linear), 11, {}};
  for (auto _ : state) benchmark::DoNotOptimize(count_by_enumeration(config));
}
BENCHMARK(BM_CountByEnumerationLinear)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_StreamFirstThousand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnumerationConfig config{ShiftProblem(n, 3, Variant::modular), 11, 1000};
  for (auto _ : state) {
    auto stream = enumerate_avoiders(config);
    std::uint64_t yielded = 0;
    while (stream.next()) ++yielded;
    benchmark::DoNotOptimize(yielded);
  }
}
BENCHMARK(BM_StreamFirstThousand)->Arg(9)->Arg(11);

}  // namespace
