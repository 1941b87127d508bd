#include <benchmark/benchmark.h>

#include "semideg/constructions.hpp"
#include "semideg/enumerate.hpp"
#include "semideg/generators.hpp"
#include "semideg/solvers.hpp"
#include "semideg/transforms.hpp"

namespace {

using namespace semideg;

void BM_HamiltonianCycleTournament(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_min_semidegree(n, (3 * n + 7) / 8, 11, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_cycle(g));
}
BENCHMARK(BM_HamiltonianCycleTournament)->Arg(12)->Arg(20)->Arg(32)->Arg(48);

void BM_HamiltonianCycleNone(benchmark::State& state) {
  // a sink-free graph with no Hamiltonian cycle: two tournaments joined one way
  const auto m = static_cast<std::size_t>(state.range(0));
  GraphBuilder b(2 * m);
  const auto t = rotational_tournament(m);
  for (const Arc& a : t.arcs()) {
    b.add_arc(a.tail, a.head);
    b.add_arc(m + a.tail, m + a.head);
  }
  for (Vertex u = 0; u < m; ++u) b.add_arc(u, m + u);
  const auto g = b.build();
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_cycle(g));
}
BENCHMARK(BM_HamiltonianCycleNone)->Arg(5)->Arg(7)->Arg(9);

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<OrientedGraph> graphs;
  for (std::uint64_t s = 0; s < 64; ++s) graphs.push_back(random_oriented(n, 0.7, s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 10, 2);

void BM_CanonicalFormRegular(benchmark::State& state) {
  const auto g = rotational_tournament(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRegular)->Arg(7)->Arg(9);

void BM_EnumerateUnlabelled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unlabelled(n));
}
BENCHMARK(BM_EnumerateUnlabelled)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DenseBuilder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = build_extremal_member(n, 0.001, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dense_4partite_hamiltonian(m.graph, m.partition, 0.1));
}
BENCHMARK(BM_DenseBuilder)->Arg(400)->Arg(800)->Arg(1600)->Unit(benchmark::kMillisecond);

void BM_BalanceClasses(benchmark::State& state) {
  const auto m = build_extremal_member(400, 0.001, 1);
  const auto p = m.partition.with_move(0, 2).with_move(1, 2);
  const auto params = ClassifierParams::make(0.1, 0.001, 400);
  for (auto _ : state) benchmark::DoNotOptimize(balance_classes(m.graph, p, params));
}
BENCHMARK(BM_BalanceClasses)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
