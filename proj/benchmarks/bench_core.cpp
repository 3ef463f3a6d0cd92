#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "segcode/coding.hpp"
#include "segcode/graph_props.hpp"
#include "segcode/matroid.hpp"
#include "segcode/strong_iso.hpp"

namespace {

using namespace segcode;

Graph random_graph(int n, std::uint64_t seed, double p = 0.5) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

std::vector<int> shuffled(int n, std::uint64_t seed) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void BM_CanonicalRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalRandom)->DenseRange(4, 10, 2);

void BM_CanonicalCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCycle)->DenseRange(4, 10, 2);

void BM_EnumerateGL(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = enumerate_nonsingular(d, [](const GF2Matrix&) { return true; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateGL)->DenseRange(2, 4);

void BM_GraphsIsomorphic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph a = random_graph(n, 2);
  const Graph b = relabel(a, shuffled(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(graphs_isomorphic(a, b));
}
BENCHMARK(BM_GraphsIsomorphic)->DenseRange(4, 12, 4);

void BM_Hamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = encode(relabel(cycle_graph(n), shuffled(n, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(find_hamiltonian_cycle(s));
}
BENCHMARK(BM_Hamiltonian)->DenseRange(6, 12, 3);

void BM_SpanningTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph complete(n);
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) complete.add_edge(i, j);
  }
  const auto s = encode(complete);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spanning_trees(s, [](std::span<const EdgeCode>) {}));
}
BENCHMARK(BM_SpanningTrees)->DenseRange(4, 6);

void BM_GraphicRecognition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = SegmentBinaryMatroid::from_coding_sequence(encode(random_graph(n, 5, 0.6))).matrix();
  // Adding the first row to the others scrambles the consecutive-ones shape.
  GF2Matrix p = GF2Matrix::identity(a.rows());
  for (std::size_t r = 1; r < a.rows(); ++r) p.set(r, 0);
  const SimpleBinaryMatroid input(p * a);
  for (auto _ : state) benchmark::DoNotOptimize(is_simple_graphic(input));
}
BENCHMARK(BM_GraphicRecognition)->DenseRange(3, 6);

void BM_MatroidIsomorphic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 6, 0.6);
  const SimpleBinaryMatroid a(SegmentBinaryMatroid::from_coding_sequence(encode(g)).matrix());
  const SimpleBinaryMatroid b(SegmentBinaryMatroid::from_coding_sequence(encode(relabel(g, shuffled(n, 7)))).matrix());
  for (auto _ : state) benchmark::DoNotOptimize(matroid_isomorphic(a, b));
}
BENCHMARK(BM_MatroidIsomorphic)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
