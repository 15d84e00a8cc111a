#pragma once

#include <string>

#include "blab/broadcast.hpp"
#include "blab/graph.hpp"
#include "blab/solver.hpp"

namespace blab {

// Key order is part of the format: kind, value, optimal, witness,
// nodes_explored, elapsed_ms. Two results serialize byte-identically
// iff they agree on every field.
std::string serialize_result(const ParameterResult& r);
ParameterResult parse_result(const std::string& text);

// {"n": .., "edges": [[u, v], ..], "labels": [..]} with canonical edge order.
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

// Strengths keyed by vertex label, zero entries omitted, index order.
std::string broadcast_by_label(const Broadcast& f, const Graph& g);

}  // namespace blab
