#include <vector>

#include <benchmark/benchmark.h>

#include "hestondist/line_distance.hpp"
#include "hestondist/vol_smile.hpp"

using namespace hestondist;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_OracleDist(benchmark::State& state) {
  OracleOptions opts;
  opts.exec = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_dist(2.0, 3.0, opts).value);
  }
}

void BM_DistToLines(benchmark::State& state) {
  std::vector<LineParams> lines;
  for (int i = 0; i < 256; ++i) {
    lines.push_back({0.05 * i - 6.0, 0.03 * i - 4.0});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_to_lines(lines, mode(state)).size());
  }
}

void BM_SmileTable(benchmark::State& state) {
  SmileQuery q;
  q.spot = 100.0;
  q.v0 = 0.04;
  q.frame = CorrelationFrame::make(0.6, -0.5);
  std::vector<double> strikes;
  for (int i = 1; i <= 200; ++i) {
    if (i != 100) strikes.push_back(static_cast<double>(i));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(smile_table(q, strikes, mode(state)).size());
  }
}

}  // namespace

BENCHMARK(BM_OracleDist)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistToLines)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmileTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
