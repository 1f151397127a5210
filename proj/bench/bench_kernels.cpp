// Serial reference kernels against their OpenMP counterparts.
#include "artin/complexes.hpp"
#include "artin/shelling.hpp"

#include <benchmark/benchmark.h>

using namespace artin;

namespace {

Execution mode(const benchmark::State &state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State &state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_FiniteTypeSubsets(benchmark::State &state) {
  const auto d = preset("A14");
  for (auto _ : state)
    benchmark::DoNotOptimize(finite_type_subsets(d, 20, mode(state)));
  label(state);
}

void BM_EnumerateH3(benchmark::State &state) {
  const CoxeterGroup g(preset("H3"));
  for (auto _ : state)
    benchmark::DoNotOptimize(g.enumerate(g.diagram().all(), std::nullopt, mode(state)));
  label(state);
}

void BM_SalvettiA3(benchmark::State &state) {
  const CoxeterGroup g(preset("A3"));
  for (auto _ : state)
    benchmark::DoNotOptimize(salvetti_poset(g, std::nullopt, mode(state)));
  label(state);
}

void BM_GarsideAxiomsB2(benchmark::State &state) {
  const ArtinMonoid m(preset("B2"));
  for (auto _ : state)
    benchmark::DoNotOptimize(m.verify_garside_axioms(4, mode(state)));
  label(state);
}

void BM_ClaimsB3(benchmark::State &state) {
  const CoxeterGroup g(preset("B3"));
  const auto ch = coxeter_chamber_complex(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_claims(ch.complex, ch.index, mode(state)));
  label(state);
}

} // namespace

BENCHMARK(BM_FiniteTypeSubsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateH3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SalvettiA3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GarsideAxiomsB2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClaimsB3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
