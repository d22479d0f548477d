#include <benchmark/benchmark.h>

#include "tistar/characterize.hpp"
#include "tistar/diophantine.hpp"
#include "tistar/polycert.hpp"
#include "tistar/transmission.hpp"

using namespace tistar;

static void BM_CheckStarlike(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  StarlikeSpec s{{7 + 12 * t, 6 + 12 * t, 3 + 12 * t, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(check_starlike(s));
  state.SetLabel("n = " + std::to_string(order(s)));
}
BENCHMARK(BM_CheckStarlike)->Arg(0)->Arg(10)->Arg(100)->Arg(1000);

static void BM_BruteforceStarlike(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  const auto g = build_starlike({{7 + 12 * t, 6 + 12 * t, 3 + 12 * t, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(is_ti_bruteforce(g));
  state.SetComplexityN(static_cast<std::int64_t>(g.vertex_count()));
}
BENCHMARK(BM_BruteforceStarlike)->Arg(0)->Arg(4)->Arg(16)->Complexity(benchmark::oNSquared);

static void BM_CheckDoubleStarlike(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  DoubleStarlikeSpec s{1 + t, {6 + 2 * t, 5 + 2 * t}, {2 + t, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(check_double_starlike(s));
}
BENCHMARK(BM_CheckDoubleStarlike)->Arg(0)->Arg(100)->Arg(10000);

static void BM_SolveByDivisors(benchmark::State& state) {
  BoxDioProblem p{state.range(0), state.range(0) + 2, -720720, 2000, 2000};
  for (auto _ : state) benchmark::DoNotOptimize(solve_by_divisors(p));
}
BENCHMARK(BM_SolveByDivisors)->Arg(10)->Arg(1000);

static void BM_SolveBruteforce(benchmark::State& state) {
  BoxDioProblem p{10, 12, -720720, state.range(0), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_bruteforce(p));
}
BENCHMARK(BM_SolveBruteforce)->Arg(100)->Arg(1000);

static void BM_CertifyXFamily(benchmark::State& state) {
  const auto fam = parse_family_line("S | 7,12 6,12 3,12 1,0");
  for (auto _ : state) benchmark::DoNotOptimize(certify_family(fam));
}
BENCHMARK(BM_CertifyXFamily);

static void BM_CertifyHFamily(benchmark::State& state) {
  const auto fam = parse_family_line("H | 1,1 | 6,2 5,2 | 2,1 1,0");
  for (auto _ : state) benchmark::DoNotOptimize(certify_family(fam));
}
BENCHMARK(BM_CertifyHFamily);

BENCHMARK_MAIN();
