#include <benchmark/benchmark.h>

#include "blab/broadcast.hpp"
#include "blab/certificates.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"
#include "blab/graph6.hpp"
#include "blab/solver.hpp"

namespace {

using namespace blab;

Graph make(FamilyKind k, std::vector<int> args) {
  return generate(FamilySpec{k, std::move(args)});
}

void BM_distances_H1(benchmark::State& state) {
  Graph g = make(FamilyKind::linked_trees_Hk, {1});
  for (auto _ : state) {
    DistanceMatrix d(g);
    benchmark::DoNotOptimize(d.diameter());
  }
}
BENCHMARK(BM_distances_H1);

void BM_analyze_H1(benchmark::State& state) {
  Graph g = make(FamilyKind::linked_trees_Hk, {1});
  DistanceMatrix d(g);
  Certificate cert = build_certificate(
      "Hk_bnr_union", FamilySpec{FamilyKind::linked_trees_Hk, {1}});
  for (auto _ : state) {
    BroadcastAnalysis a = analyze(cert.broadcast, g, d);
    benchmark::DoNotOptimize(a.broadcasters().size());
  }
}
BENCHMARK(BM_analyze_H1);

void BM_solve_spider_alpha_bn(benchmark::State& state) {
  Graph g = make(FamilyKind::spider, {2, 2, 2, 2});
  SolveOptions so;
  so.threads = 1;
  for (auto _ : state) {
    ParameterResult r = solve(g, ParameterKind::alpha_bn, so);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_solve_spider_alpha_bn);

void BM_solve_grid33_Gamma(benchmark::State& state) {
  Graph g = make(FamilyKind::grid, {3, 3});
  SolveOptions so;
  so.threads = 1;
  for (auto _ : state) {
    ParameterResult r = solve(g, ParameterKind::Gamma_b, so);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_solve_grid33_Gamma);

void BM_graph6_round_trip(benchmark::State& state) {
  Graph g = make(FamilyKind::grid, {5, 13});
  for (auto _ : state) {
    Graph back = parse_graph6(write_graph6(g));
    benchmark::DoNotOptimize(back.m());
  }
}
BENCHMARK(BM_graph6_round_trip);

}  // namespace

BENCHMARK_MAIN();
