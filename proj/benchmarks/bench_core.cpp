#include <benchmark/benchmark.h>

#include "glpwb/glp.hpp"
#include "glpwb/icard.hpp"
#include "glpwb/simple_function.hpp"

using namespace glpwb;

namespace {

void BM_Compare(benchmark::State& state) {
  const Ordinal a = parse_ordinal("e[w^2](w*3+e[w](1))+w^(e[w](2)+1)");
  const Ordinal b = parse_ordinal("e[w^2](w*3+e[w](1))+w^(e[w](2))*5");
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_Compare);

void BM_HyperLog(benchmark::State& state) {
  const Ordinal x = parse_ordinal("e[w](w*3)+e[w](w*2)");
  const Ordinal xi = parse_ordinal("w+1");
  for (auto _ : state) benchmark::DoNotOptimize(hyper_log(xi, x));
}
BENCHMARK(BM_HyperLog);

void BM_Ceil(benchmark::State& state) {
  const SimpleFunction r = parse_simple_function("{0:e[w](1), 1:w^w, w:w^2, w+1:2}");
  for (auto _ : state) benchmark::DoNotOptimize(ceil(r));
}
BENCHMARK(BM_Ceil);

void BM_DerivedSet(benchmark::State& state) {
  const Ordinal theta = parse_ordinal("e[w^2](2)");
  const SimpleSet s = parse_simple_set("(0,w]_1 & (-1,w^2]_0 | (3,5]_0 | (w,inf)_w", theta);
  const Ordinal lambda = parse_ordinal("w+1");
  for (auto _ : state) benchmark::DoNotOptimize(derived_set(s, lambda));
}
BENCHMARK(BM_DerivedSet);

void BM_EvalClosed(benchmark::State& state) {
  const Ordinal theta = parse_ordinal("e[w^2](2)");
  const FormulaPtr phi = parse_formula("[1]([1]<0>T -> <0>T) -> [w](<1><0>T | [0]F)");
  for (auto _ : state) benchmark::DoNotOptimize(eval_closed(phi, theta, true));
}
BENCHMARK(BM_EvalClosed);

}  // namespace

BENCHMARK_MAIN();
