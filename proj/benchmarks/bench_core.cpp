// Microbenchmarks for the exact rational hot paths: separation, locked
// enumeration, LP solves, vertex enumeration, decomposition, uncrossing.
#include <benchmark/benchmark.h>

#include <vector>

#include "subtour/bound.hpp"
#include "subtour/decompose.hpp"
#include "subtour/describe.hpp"
#include "subtour/graph.hpp"
#include "subtour/laminar.hpp"
#include "subtour/locked.hpp"
#include "subtour/mincut.hpp"
#include "subtour/polytope.hpp"
#include "subtour/simplex.hpp"

namespace {

using namespace subtour;

void BM_global_min_cut_petersen(benchmark::State& state) {
  const Graph g = make_petersen();
  const QPoint w(static_cast<size_t>(g.m()), Rat(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(global_min_cut(g, w));
}
BENCHMARK(BM_global_min_cut_petersen);

void BM_enumerate_locked_k5(benchmark::State& state) {
  const Graph g = make_complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_locked(g));
}
BENCHMARK(BM_enumerate_locked_k5);

void BM_enumerate_locked_petersen(benchmark::State& state) {
  const Graph g = make_petersen();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_locked(g));
}
BENCHMARK(BM_enumerate_locked_petersen);

void BM_matroid_oracle_scan_prism(benchmark::State& state) {
  const Graph g = make_prism();
  for (auto _ : state)
    benchmark::DoNotOptimize(locked_edge_sets_oracle_scan(g));
}
BENCHMARK(BM_matroid_oracle_scan_prism);

void BM_lp_solve_full_k5(benchmark::State& state) {
  const Graph g = make_complete(5);
  const ConstraintSystem sys = full_P(g);
  const QPoint w(static_cast<size_t>(g.m()), Rat(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(lp_solve(sys, w, LpDir::Min));
}
BENCHMARK(BM_lp_solve_full_k5);

void BM_enumerate_vertices_q_k4(benchmark::State& state) {
  const Graph g = make_complete(4);
  const ConstraintSystem sys = Q_description(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(sys));
}
BENCHMARK(BM_enumerate_vertices_q_k4);

void BM_cutting_plane_bound_prism(benchmark::State& state) {
  const Graph g = make_prism();
  const QPoint w(static_cast<size_t>(g.m()), Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(bound(g, w));
}
BENCHMARK(BM_cutting_plane_bound_prism);

void BM_caratheodory_split_k4(benchmark::State& state) {
  const Graph g = make_complete(4);
  const QPoint y(static_cast<size_t>(g.m()), Rat(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(caratheodory_split(g, y));
}
BENCHMARK(BM_caratheodory_split_k4);

void BM_uncross_prism(benchmark::State& state) {
  const Graph g = make_prism();
  // Tree 0-1, 1-2, 0-3, 1-4, 4-5 plus crossing tight subtrees.
  const QPoint x = char_vector(g, EdgeSet{0, 2, 5, 6, 7});
  const std::vector<VertexSet> fam = {{0, 1, 2}, {1, 2, 4}, {0, 1, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(uncross(g, fam, x));
}
BENCHMARK(BM_uncross_prism);

}  // namespace

BENCHMARK_MAIN();
