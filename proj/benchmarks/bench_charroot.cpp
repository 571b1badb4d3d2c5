#include <benchmark/benchmark.h>

#include "fracosc/charroot.hpp"

namespace {

void BM_SolveCharRoot(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0)) / 100.0;
  const fracosc::OscillatorParams p{1.0, 0.1, beta};
  for (auto _ : state) benchmark::DoNotOptimize(fracosc::solve_char_root(p).s);
}
BENCHMARK(BM_SolveCharRoot)->Arg(5)->Arg(50)->Arg(95);

}  // namespace
