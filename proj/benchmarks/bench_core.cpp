#include <vector>

#include <benchmark/benchmark.h>

#include "coexnull/coexnull.hpp"

namespace {

using namespace coexnull;

void BM_LcmvWeights(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  std::vector<double> nulls;
  for (int i = 0; i < K - 1; ++i) nulls.push_back(-1.2 + 0.25 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcmv_weights(K, 1.35, nulls));
  }
}
BENCHMARK(BM_LcmvWeights)->Arg(2)->Arg(6)->Arg(10);

Scenario bench_scenario(int K, int N) {
  RadioParams p;
  p.K = K;
  return sample_scenario(p, 30.0, 1, N, 50.0, 50.0, 7);
}

void BM_Evaluate(benchmark::State& state) {
  const Scenario s = bench_scenario(6, static_cast<int>(state.range(0)));
  const NullingDecision none = NullingDecision::none(s.num_stas());
  PolicyWeights w = weights_for(Policy::MaxSum);
  w.protect_wifi = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(s, none, w, std::nullopt));
  }
}
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(16);

void BM_SolveGreedy(benchmark::State& state) {
  const Scenario s = bench_scenario(6, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_greedy(s, Policy::MaxSum));
  }
}
BENCHMARK(BM_SolveGreedy)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveExhaustive(benchmark::State& state) {
  const Scenario s = bench_scenario(6, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exhaustive(s, Policy::MaxSum));
  }
}
BENCHMARK(BM_SolveExhaustive)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
