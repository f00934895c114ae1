#include <benchmark/benchmark.h>

#include "ttw4d/geometry.hpp"
#include "ttw4d/jet.hpp"
#include "ttw4d/lattice.hpp"

using namespace ttw4d;

namespace {

const BasePoint kBase{1.1, 0.3, 0.5, 0.7};

void BM_JetMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Jet a = Jet::variable(kBase, order, 0) + Jet::variable(kBase, order, 2) * 0.5;
  const Jet b = Jet::variable(kBase, order, 1) * Jet::variable(kBase, order, 3) + 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiply)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

void BM_JetElementary(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Jet x = Jet::variable(kBase, order, 0) * Jet::variable(kBase, order, 1) + 0.4;
  for (auto _ : state) benchmark::DoNotOptimize(exp(sin(x)));
}
BENCHMARK(BM_JetElementary)->Arg(2)->Arg(4)->Arg(6);

void BM_Curvature(benchmark::State& state) {
  const auto P = SystemParams::parse("2,1,1", "1/2,1/2,1/2,1/2", "1");
  for (auto _ : state) benchmark::DoNotOptimize(curvature_at(P, Point{1.0, 0.3, 0.6, 0.7}));
}
BENCHMARK(BM_Curvature);

void BM_IdentityCheck(benchmark::State& state) {
  const auto P = SystemParams::parse("2,1,1", "1/2,1/2,1/2,1/2", std::nullopt);
  const long m = interior_margin(P);
  const QuantumState s{{m, m + 1, m, m + 1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_identity(1, Identity::cubic, P, s));
}
BENCHMARK(BM_IdentityCheck);

}  // namespace

BENCHMARK_MAIN();
