#include <benchmark/benchmark.h>

#include "netdual/betti.hpp"
#include "netdual/duality.hpp"
#include "netdual/monomial_os.hpp"
#include "netdual/nets.hpp"
#include "netdual/series.hpp"

using namespace netdual;

namespace {

static void BM_AlexanderDualKn(benchmark::State& state) {
  MonomialIdeal j = j_complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MonomialIdeal dual = alexander_dual(j);
    benchmark::DoNotOptimize(dual);
  }
}
BENCHMARK(BM_AlexanderDualKn)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_HochsterPrimalKn(benchmark::State& state) {
  MonomialIdeal j = j_complete_graph(static_cast<int>(state.range(0)));
  FieldChoice q = FieldChoice::rationals();
  for (auto _ : state) {
    BettiTable t = hochster_betti(j, q);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_HochsterPrimalKn)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_HochsterDualKn(benchmark::State& state) {
  MonomialIdeal dual = alexander_dual(j_complete_graph(static_cast<int>(state.range(0))));
  FieldChoice q = FieldChoice::rationals();
  for (auto _ : state) {
    BettiTable t = hochster_betti(dual, q);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_HochsterDualKn)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_CutPolynomialKn(benchmark::State& state) {
  MonomialIdeal j2 = quadratic_part(j_complete_graph(static_cast<int>(state.range(0))));
  int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    IntPolynomial c = cut_polynomial(j2, threads);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CutPolynomialKn)
    ->Args({6, 1})
    ->Args({6, 2})
    ->Args({7, 1})
    ->Args({7, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_KoszulOracle(benchmark::State& state) {
  MonomialIdeal j = j_complete_graph(4);  // 6 variables
  FieldChoice q = FieldChoice::rationals();
  for (auto _ : state) {
    BettiTable t = koszul_tor_oracle(j, q);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_KoszulOracle)->Unit(benchmark::kMillisecond);

static void BM_NetCheckDual(benchmark::State& state) {
  CatalogEntry e = catalog("pappus");
  GroundSet g = arrangement_ground(e.arrangement);
  for (auto _ : state) {
    NetVerdict v = net_check_dual(g, *e.candidate);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_NetCheckDual)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
