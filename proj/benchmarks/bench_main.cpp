#include <benchmark/benchmark.h>

#include "glab/cayley/bfs.hpp"
#include "glab/groups/catalog.hpp"
#include "glab/lab/constructors.hpp"

using namespace glab;

static void BM_BallH(benchmark::State& state) {
  auto h = make_h();
  const auto radius = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    Ball ball = build_ball(h, radius);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallH)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BallGp(benchmark::State& state) {
  auto gp = make_gp(20);
  const auto radius = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    Ball ball = build_ball(gp, radius);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallGp)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EvaluateWk(benchmark::State& state) {
  auto gp = make_gp(20);
  Word w = lab::build_wk(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(gp, w));
}
BENCHMARK(BM_EvaluateWk)->Arg(1)->Arg(2);

static void BM_PadicAdd(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  PAdicRing ring(p);
  auto x = ring.make(BigInt(12345), 17);
  auto y = ring.make(BigInt(-987), 9);
  for (auto _ : state) benchmark::DoNotOptimize(ring.add(x, y));
}
BENCHMARK(BM_PadicAdd)->Arg(2)->Arg(20);

static void BM_ShortcutSk(benchmark::State& state) {
  auto h = make_h();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(h, lab::shortcut_sk(1'000'003)));
}
BENCHMARK(BM_ShortcutSk);
BENCHMARK_MAIN();
