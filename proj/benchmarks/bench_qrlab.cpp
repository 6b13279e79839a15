#include <benchmark/benchmark.h>

#include "qrlab/catalog.hpp"
#include "qrlab/enumerate.hpp"
#include "qrlab/transform.hpp"

using namespace qrlab;

namespace {

void enumerate_kind(benchmark::State& state, ModelKind kind) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t models = 0;
  for (auto _ : state) {
    models = 0;
    enumerate_models({kind, n}, [&](const AnyAlgebra&) { ++models; });
  }
  state.counters["models"] = static_cast<double>(models);
}

void BM_EnumerateEffect(benchmark::State& s) { enumerate_kind(s, ModelKind::Effect); }
void BM_EnumeratePseudoeffect(benchmark::State& s) { enumerate_kind(s, ModelKind::Pseudoeffect); }
void BM_EnumerateCqrl(benchmark::State& s) { enumerate_kind(s, ModelKind::Cqrl); }
void BM_EnumerateQrl(benchmark::State& s) { enumerate_kind(s, ModelKind::Qrl); }

BENCHMARK(BM_EnumerateEffect)->DenseRange(3, 6);
BENCHMARK(BM_EnumeratePseudoeffect)->DenseRange(3, 6);
BENCHMARK(BM_EnumerateCqrl)->DenseRange(3, 4);
BENCHMARK(BM_EnumerateQrl)->DenseRange(3, 4);

void BM_NaiveOracle(benchmark::State& state) {
  const auto kind = static_cast<ModelKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(naive_oracle(kind, 3));
}
BENCHMARK(BM_NaiveOracle)
    ->Arg(static_cast<int>(ModelKind::Effect))
    ->Arg(static_cast<int>(ModelKind::Cqrl))
    ->Arg(static_cast<int>(ModelKind::Qrl))
    ->Unit(benchmark::kMillisecond);

// Checkers on the eight-element Boolean algebra and its images.
void BM_CheckAxioms(benchmark::State& state, const char* name) {
  const AnyAlgebra a = find_catalog_entry(name)->algebra;
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(a));
}
BENCHMARK_CAPTURE(BM_CheckAxioms, effect, "cube");
BENCHMARK_CAPTURE(BM_CheckAxioms, pseudoeffect, "cube-pseudo");
BENCHMARK_CAPTURE(BM_CheckAxioms, cqrl, "cube-cqrl");
BENCHMARK_CAPTURE(BM_CheckAxioms, qrl, "cube-qrl");

void BM_CqrlOfEffect(benchmark::State& state) {
  const auto e = std::get<EffectAlgebra>(find_catalog_entry("cube")->algebra);
  const auto le = std::get<LatticeEffectAlgebra>(detect_lattice_effect(e));
  for (auto _ : state) benchmark::DoNotOptimize(cqrl_of_effect(le));
}
BENCHMARK(BM_CqrlOfEffect);

void BM_CanonicalKey(benchmark::State& state) {
  const AnyAlgebra a = find_catalog_entry("cube-qrl")->algebra;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(a));
}
BENCHMARK(BM_CanonicalKey);

}  // namespace
BENCHMARK_MAIN();
