#include <benchmark/benchmark.h>

#include "ttk/classify.hpp"
#include "ttk/surgery.hpp"
#include "ttk/whitehead.hpp"

namespace {

void BM_TtkWord(benchmark::State& state) {
  const ttk::Int p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ttk::ttk_word(p, p - 1, p / 2, 1));
}
BENCHMARK(BM_TtkWord)->Arg(50)->Arg(500)->Arg(5000);

void BM_Minimize(benchmark::State& state) {
  const ttk::CyclicWord w(ttk::ttk_word(state.range(0), 4, 9, 1));
  for (auto _ : state) benchmark::DoNotOptimize(ttk::whitehead_minimize(w));
}
BENCHMARK(BM_Minimize)->Arg(23)->Arg(101)->Arg(503);

void BM_PrimitivityOracle(benchmark::State& state) {
  const ttk::Word w = ttk::ttk_word(state.range(0), 5, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ttk::is_primitive_oracle(w));
}
BENCHMARK(BM_PrimitivityOracle)->Arg(17)->Arg(41)->Arg(97);

void BM_SfOracle(benchmark::State& state) {
  const ttk::Word w = ttk::ttk_word(7, 2, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ttk::is_sf_oracle(w, 2, 3));
}
BENCHMARK(BM_SfOracle);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ttk::enumerate_middle_psf(state.range(0)));
}
BENCHMARK(BM_Enumerate)->Arg(20)->Arg(60)->Arg(120);

void BM_PsfReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ttk::psf_report({97, 30, 41, 1, 1}));
}
BENCHMARK(BM_PsfReport);

}  // namespace

BENCHMARK_MAIN();
