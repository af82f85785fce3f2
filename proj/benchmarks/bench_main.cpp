#include <benchmark/benchmark.h>

#include "wildchar/orbit.hpp"
#include "wildchar_cli/verify.hpp"

namespace {

using namespace wildchar;
using Q = GaussRational;

Point<Q> tame_start() {
  Rng rng(1);
  return tame_traces(random_tame_triple(rng, 3));
}

void BM_ExactTameOrbit(benchmark::State& state) {
  const Point<Q> p = tame_start();
  const auto w = BraidWord::parse("h1 h2 h3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(p, w, static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExactTameOrbit)->Arg(8)->Arg(32);

void BM_FloatWildPureOrbit(benchmark::State& state) {
  const Point<Complexd> p = to_float(WildPoint<Q>{Q(2), Q(2), Q::fraction(9, 2), Q(3), Q(3), Q::fraction(5, 2)});
  const auto w = BraidWord::parse("pure");
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(p, w, static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FloatWildPureOrbit)->Arg(1000)->Arg(100000);

void BM_ExactWildRoundTrip(benchmark::State& state) {
  Rng rng(2);
  const auto r = random_wild_rep(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wild_reconstruct(wild_traces(r)));
  }
}
BENCHMARK(BM_ExactWildRoundTrip);

void BM_GroupoidNormalize(benchmark::State& state) {
  Rng rng(3);
  const auto rep = apply_gauge(wild_to_groupoid(random_wild_rep(rng)), random_wild_gauge(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(rep, wild_tree()));
  }
}
BENCHMARK(BM_GroupoidNormalize);

void BM_FrickeSuite(benchmark::State& state) {
  cli::SuiteOptions o;
  o.count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cli::run_suite("fricke", o));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FrickeSuite)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
