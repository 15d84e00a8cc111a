#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blab/broadcast.hpp"
#include "blab/graph.hpp"

namespace blab {

struct SolveOptions {
  std::int64_t node_budget = 100'000'000;
  double time_budget_seconds = 0;  // 0 = no wall-clock limit
  int max_vertices_minimize = 24;
  int max_vertices_maximize = 22;
  bool enable_tree_heuristics = true;
  // 0 = take BROADCAST_LAB_THREADS, falling back to hardware concurrency.
  int threads = 0;
};

enum class BoundDirection { exact, lower, upper };

struct ParameterResult {
  ParameterKind kind = ParameterKind::gamma_b;
  int value = 0;
  Broadcast witness;
  bool optimal = false;
  std::int64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;

  // exact when optimal; otherwise the side of the optimum the incumbent
  // value sits on (lower for maximization kinds, upper for minimization).
  BoundDirection bound_direction() const;
};

// Cheap a-priori bounds (inclusive) used to seed and prune the search.
// Throws on disconnected input.
std::pair<int, int> bounds(const Graph& g, ParameterKind kind);

// Exact branch-and-bound over strength vectors, depth first in descending
// eccentricity order.  The witness is the lexicographically least optimal
// strength vector.  Throws std::invalid_argument on disconnected input or
// when n exceeds the per-direction vertex cap.
ParameterResult solve(const Graph& g, ParameterKind kind, const SolveOptions& opts = {});

// All optimal broadcasts in lexicographic order, at most `limit` of them.
// Requires n <= 12.
std::vector<Broadcast> enumerate_optimal(const Graph& g, ParameterKind kind,
                                         int limit = 1000, const SolveOptions& opts = {});

// Exact independence number with a witness independent set encoded as a 0/1
// broadcast.  Standalone search; accepts disconnected graphs, caps at
// max_vertices.
ParameterResult independence_number(const Graph& g, int max_vertices = 40);

}  // namespace blab
