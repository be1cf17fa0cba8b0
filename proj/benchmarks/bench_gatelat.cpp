#include <benchmark/benchmark.h>

#include <numeric>

#include "gatelat/automaton.hpp"
#include "gatelat/edge_shift.hpp"
#include "gatelat/gate.hpp"
#include "gatelat/lattice.hpp"
#include "gatelat/parity.hpp"

using namespace gatelat;

namespace {

ShiftPtr full2() {
  static ShiftPtr s = make_shift(
      RawGraph{{"v"}, {{"0", "v", "v"}, {"1", "v", "v"}}});
  return s;
}

ShiftPtr cg2() {
  static ShiftPtr s = make_shift(RawGraph{
      {"a", "b"},
      {{"aa", "a", "a"}, {"ab", "a", "b"}, {"ba", "b", "a"}, {"bb", "b", "b"}}});
  return s;
}

Gate chi() {
  auto s = cg2();
  int a = *s->find_vertex("a");
  return gate_from_function(s, {0, 1}, [a, s](std::span<int> w) {
    if (s->src(w[0]) != a)
      return;
    // toggle the middle vertex
    int mid = s->dst(w[0]) == a ? 1 : 0;
    w[0] = *s->find_edge(std::string("a") + (mid ? "b" : "a"));
    w[1] = *s->find_edge(std::string(mid ? "b" : "a") +
                         s->vertex_name(s->dst(w[1])));
  });
}

Gate flip() {
  return gate_from_function(full2(), {0, 0},
                            [](std::span<int> w) { w[0] = 1 - w[0]; });
}

void BM_EnumeratePaths(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_paths(*full2(), {0, 0}, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_EnumeratePaths)->DenseRange(8, 16, 4);

void BM_RebaseCompose(benchmark::State &state) {
  int w = static_cast<int>(state.range(0));
  Gate g = chi();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        compose(rebase(g, {0, w}), translate(rebase(g, {0, w}), 1)));
}
BENCHMARK(BM_RebaseCompose)->DenseRange(4, 12, 4);

void BM_IsEven(benchmark::State &state) {
  Gate g = chi();
  for (auto _ : state)
    benchmark::DoNotOptimize(is_even(g));
}
BENCHMARK(BM_IsEven);

void BM_OreExhaustive7(benchmark::State &state) {
  Perm p = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  for (auto _ : state)
    benchmark::DoNotOptimize(perm_commutator_factor(p));
}
BENCHMARK(BM_OreExhaustive7);

void BM_OreConstructive(benchmark::State &state) {
  auto n = static_cast<unsigned>(state.range(0));
  std::vector<unsigned> cycle(n - (n % 2 == 0));
  std::iota(cycle.begin(), cycle.end(), 0u);
  Perm p = Perm::from_cycles(n, {cycle});
  for (auto _ : state)
    benchmark::DoNotOptimize(ore_constructive(p));
}
BENCHMARK(BM_OreConstructive)->RangeMultiplier(4)->Range(16, 1024);

void BM_CommutatorWitness(benchmark::State &state) {
  Gate g = chi();
  for (auto _ : state)
    benchmark::DoNotOptimize(commutator_witness(g));
}
BENCHMARK(BM_CommutatorWitness);

void BM_Evenize(benchmark::State &state) {
  auto lat = make_lattice(chi(), 2, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(evenize(lat));
}
BENCHMARK(BM_Evenize);

void BM_LatticeToCA(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  auto lat = make_lattice(chi(), n, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(gate_lattice_to_ca(lat));
}
BENCHMARK(BM_LatticeToCA)->DenseRange(2, 8, 2);

void BM_CaEqualAfterRefine(benchmark::State &state) {
  auto lat = make_lattice(chi(), 2, 0);
  auto parts = word_of(refine(lat, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(word_equal(parts, word_of(lat)));
}
BENCHMARK(BM_CaEqualAfterRefine);

void BM_NormalGenerationTrace(benchmark::State &state) {
  auto f = word_of(make_lattice(flip(), 2, 0));
  auto target = make_lattice(flip(), 4, 0);
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(normal_generation_trace(f, target, budget));
  }
}
BENCHMARK(BM_NormalGenerationTrace)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
