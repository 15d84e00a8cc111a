#pragma once

#include <string>
#include <vector>

#include "blab/broadcast.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"

namespace blab {

// A named broadcast on a family instance together with the predicates it
// witnesses. build_certificate re-checks weight and every listed predicate
// on the generated instance before returning, so a Certificate in hand is
// proof the properties hold for that instance.
struct Certificate {
  std::string name;
  FamilySpec spec;
  Graph graph;
  Broadcast broadcast;
  std::vector<std::string> properties;
};

std::vector<std::string> certificate_names();
Certificate build_certificate(const std::string& name, const FamilySpec& spec);

// One reduction step: strength of `vertex` dropped from `from` to `to`.
struct ReductionStep {
  int vertex;
  int from;
  int to;
};

// Drops one unit from a broadcaster whose private boundary is empty.
// Preconditions (checked): f dominating and bn-independent, v a broadcaster,
// PB(v) empty. The result is dominating again, bn-independence survives, and
// v's new private boundary equals its whole (nonempty) boundary.
Broadcast decrement_reduction(const Broadcast& f, int v, const Graph& g);

struct ReductionTrace {
  Broadcast result;
  std::vector<ReductionStep> steps;
};

// Repeatedly decrements the least-index broadcaster with empty private
// boundary. Input must be dominating and bn-independent; the result is
// minimal dominating.
ReductionTrace irredundant_reduction(const Broadcast& f, const Graph& g);

}  // namespace blab
