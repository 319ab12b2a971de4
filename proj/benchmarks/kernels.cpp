#include <benchmark/benchmark.h>

#include "pdbell/bernoulli.hpp"
#include "pdbell/enumeration.hpp"
#include "pdbell/memo_triangle.hpp"
#include "pdbell/polynomial_families.hpp"
#include "pdbell/sequences.hpp"
#include "pdbell/series.hpp"

using namespace pdbell;

namespace {

// Cold Stirling triangle: a fresh table per iteration.
void BM_StirlingTriangleCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MemoTriangle t("bench", [](int m, const std::vector<BigInt>& prev) {
      std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, 0);
      if (m == 0) {
        row[0] = 1;
        return row;
      }
      for (int k = 1; k <= m; ++k) {
        BigInt v = prev[static_cast<std::size_t>(k - 1)];
        if (k < m) v += k * prev[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(k)] = v;
      }
      return row;
    });
    benchmark::DoNotOptimize(t.at(n, n / 2));
  }
}
BENCHMARK(BM_StirlingTriangleCold)->Arg(50)->Arg(200);

void BM_PdbRowWarm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  benchmark::DoNotOptimize(pdb_row(n));
  for (auto _ : state) benchmark::DoNotOptimize(pdb_row(n));
}
BENCHMARK(BM_PdbRowWarm)->Arg(20)->Arg(100);

void BM_PdbPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pdb_poly(n, n / 3));
}
BENCHMARK(BM_PdbPoly)->Arg(20)->Arg(50);

void BM_BrutePdbRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_pdb_row(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ordered_bell(n).get_si()));
}
BENCHMARK(BM_BrutePdbRow)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

TruncatedSeries bench_series(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = make_rational(k + 1, k * k + 2);
  return TruncatedSeries(order, std::move(c));
}

void BM_ComposeHorner(benchmark::State& state) {
  const auto a = bench_series(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_expm1(a));
}
BENCHMARK(BM_ComposeHorner)->Arg(16)->Arg(32);

void BM_ComposeTransport(benchmark::State& state) {
  const auto a = bench_series(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_expm1_transport(a));
}
BENCHMARK(BM_ComposeTransport)->Arg(16)->Arg(32);

void BM_BernoulliSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_series(4, order));
}
BENCHMARK(BM_BernoulliSeries)->Arg(24)->Arg(48);

}  // namespace
BENCHMARK_MAIN();
