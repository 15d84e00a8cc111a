#pragma once

#include <string>
#include <vector>

#include "blab/graph.hpp"

namespace blab {

// A broadcast assigns every vertex an integer strength.  Valid strengths are
// bounded by the vertex eccentricity; a vertex alone in its component may
// use strength 1.  The all-zero broadcast is valid.
class Broadcast {
 public:
  Broadcast() = default;
  explicit Broadcast(std::vector<int> strengths);
  static Broadcast zero(int n);

  int n() const { return static_cast<int>(s_.size()); }
  int strength(int v) const { return s_.at(v); }
  const std::vector<int>& strengths() const { return s_; }
  int weight() const { return weight_; }

  // Broadcasting vertices, ascending.
  std::vector<int> broadcasters() const;
  // Broadcasters of strength exactly 1 / at least 2.
  std::vector<int> strength_one() const;
  std::vector<int> strength_two_plus() const;

  Broadcast with_strength(int v, int value) const;

  bool operator==(const Broadcast& o) const { return s_ == o.s_; }

 private:
  std::vector<int> s_;
  int weight_ = 0;
};

bool is_valid(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
// Throws std::invalid_argument unless f fits g and every strength is within
// its cap.
void require_valid(const Broadcast& f, const Graph& g, const DistanceMatrix& d);

// The nine parameters the solvers compute.
enum class ParameterKind {
  gamma_b,    // min weight dominating
  Gamma_b,    // max weight minimal dominating
  alpha,      // independence number (0/1 broadcasts)
  alpha_h,    // max weight hearing-independent
  alpha_bn,   // max weight bn-independent
  alpha_bnr,  // max weight bn-independent irredundant
  alpha_bnd,  // max weight bn-independent minimal dominating
  i_bn,       // min weight maximal bn-independent
  alpha_hd,   // max weight hearing-independent minimal dominating
};

const std::vector<ParameterKind>& all_parameter_kinds();
std::string parameter_name(ParameterKind kind);
ParameterKind parameter_from_name(const std::string& name);
bool is_minimization(ParameterKind kind);

// Per-broadcaster neighbourhood structure of a broadcast.
struct BroadcasterSets {
  int vertex = 0;
  int strength = 0;
  std::vector<int> ball;                // N_f: all vertices that hear v
  std::vector<int> boundary;            // B_f: heard at distance exactly f(v)
  std::vector<int> private_neighbours;  // PN_f: heard by v and no other
  std::vector<int> private_boundary;    // PB_f, via the decrement-by-one rule
};

class BroadcastAnalysis {
 public:
  const std::vector<BroadcasterSets>& broadcasters() const { return sets_; }
  const BroadcasterSets& sets_for(int v) const;
  const std::vector<int>& unheard() const { return unheard_; }

  // Edges in canonical (u < v, sorted) order with the broadcasters covering
  // each; an edge is covered by x when both ends hear x and at least one end
  // is interior to x's ball.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& covered_by() const { return covered_by_; }
  std::vector<std::pair<int, int>> uncovered_edges() const;

  friend BroadcastAnalysis analyze(const Broadcast& f, const Graph& g,
                                   const DistanceMatrix& d);

 private:
  std::vector<BroadcasterSets> sets_;
  std::vector<int> unheard_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> covered_by_;
};

BroadcastAnalysis analyze(const Broadcast& f, const Graph& g, const DistanceMatrix& d);

bool is_dominating(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
// Every broadcaster keeps a nonempty private boundary; false for the zero
// broadcast by convention (and by the definition's nonemptiness demand).
bool is_irredundant(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
bool is_minimal_dominating(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
// Reference implementation: dominating and no single-vertex decrement stays
// dominating.  Equivalent to is_minimal_dominating; kept separate as an
// independent check.  Throws if f is not dominating.
bool is_minimal_dominating_oracle(const Broadcast& f, const Graph& g, const DistanceMatrix& d);

// No broadcaster hears another one.
bool is_hearing_independent(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
// Broadcast balls overlap in boundaries only (definitional form).
bool is_bn_independent(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
// d(u, v) >= f(u) + f(v) for every broadcaster pair; equivalent to
// is_bn_independent.
bool bn_pairwise_criterion(const Broadcast& f, const Graph& g, const DistanceMatrix& d);

// Ground truth via single-increment scan; throws if f is not bn-independent.
bool is_maximal_bn_independent(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
// The two closed-form characterizations of maximality, exposed for
// cross-checking: (i) dominating plus boundary-minus-private nonempty for
// each broadcaster (or a single broadcaster), (ii) every component of the
// graph minus uncovered edges holds at least two broadcasters.
bool maximal_bn_characterization_i(const Broadcast& f, const Graph& g, const DistanceMatrix& d);
bool maximal_bn_characterization_ii(const Broadcast& f, const Graph& g, const DistanceMatrix& d);

enum class Ordering { less, equal, greater, incomparable };
// Pointwise comparison of strength vectors.
Ordering compare(const Broadcast& f, const Broadcast& h);

}  // namespace blab
