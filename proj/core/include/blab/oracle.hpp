#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "blab/broadcast.hpp"
#include "blab/graph.hpp"

// Naive reference implementations, kept deliberately independent of the
// optimized paths in broadcast.cpp and solver.cpp: distances come from
// Floyd-Warshall instead of BFS, predicates are written straight off the
// definitions, and optima come from full enumeration of strength vectors.
// The verification harness and the unit tests compare against these.
namespace blab::oracle {

inline constexpr int INF = 1 << 28;

// Dense all-pairs distances; INF for unreachable pairs.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

int eccentricity(const std::vector<std::vector<int>>& d, int v);
int strength_cap(const std::vector<std::vector<int>>& d, int v);

bool dominating(const std::vector<int>& f, const std::vector<std::vector<int>>& d);
bool hearing_independent(const std::vector<int>& f, const std::vector<std::vector<int>>& d);
// Definitional bn-independence: overlapping balls may share boundary
// vertices only.
bool bn_independent(const std::vector<int>& f, const std::vector<std::vector<int>>& d);
// Private boundary of v under the decrement-by-one rule.
std::vector<int> private_boundary(const std::vector<int>& f,
                                  const std::vector<std::vector<int>>& d, int v);
bool irredundant(const std::vector<int>& f, const std::vector<std::vector<int>>& d);
bool maximal_bn_independent(const std::vector<int>& f, const std::vector<std::vector<int>>& d);
// True minimality: no pointwise-smaller broadcast dominates.  Exponential in
// the weight; for small instances only.
bool minimal_dominating_full(const std::vector<int>& f, const std::vector<std::vector<int>>& d);

bool feasible_for(ParameterKind kind, const std::vector<int>& f,
                  const std::vector<std::vector<int>>& d);

// Visits every strength vector bounded by caps, in lexicographic order.
void for_each_vector(const std::vector<int>& caps,
                     const std::function<void(const std::vector<int>&)>& fn);

struct KindOptimum {
  bool feasible_exists = false;
  int value = 0;
  std::vector<int> lex_least_witness;  // first optimal vector in lex order
};

// Full-enumeration optima for all nine parameters in one sweep.  Guarded by
// a cap on the product of strength ranges; meant for n <= 7 or so.
std::array<KindOptimum, 9> exhaustive_optima(const Graph& g,
                                             std::uint64_t max_vectors = 80'000'000);

KindOptimum exhaustive_optimum(const Graph& g, ParameterKind kind,
                               std::uint64_t max_vectors = 80'000'000);

// All optimal strength vectors for the kind, lexicographic order.
std::vector<std::vector<int>> exhaustive_optimal_set(const Graph& g, ParameterKind kind,
                                                     std::uint64_t max_vectors = 80'000'000);

}  // namespace blab::oracle
