#pragma once

#include <string>
#include <utility>
#include <vector>

namespace blab {

// Finite simple undirected graph on vertices 0..n-1.  Immutable after
// construction; adjacency lists are kept sorted.  Every vertex carries a
// label; generators use the customary names of the family (e.g. "l_2"),
// ad-hoc graphs default to "v_1".."v_n".
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
        std::vector<std::string> labels = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(int u, int v) const;

  // Edge list with u < v, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of the vertex with the given label; throws if absent.
  int vertex(const std::string& label) const;

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
};

// All-pairs distances plus the derived metric quantities the rest of the
// library keys off.  UNREACHABLE marks cross-component pairs.
class DistanceMatrix {
 public:
  static constexpr int UNREACHABLE = -1;

  explicit DistanceMatrix(const Graph& g);

  int n() const { return n_; }
  int dist(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return dist(u, v) != UNREACHABLE; }

  // Eccentricity within v's component (max finite distance from v).
  int eccentricity(int v) const { return ecc_.at(v); }
  int diameter() const { return diameter_; }
  int radius() const { return radius_; }
  int min_degree() const { return min_degree_; }
  bool connected() const { return connected_; }
  int component_size(int v) const { return component_size_.at(v); }

  // Largest admissible broadcast strength at v: eccentricity, except that a
  // vertex alone in its component may broadcast at strength 1.
  int strength_cap(int v) const {
    return component_size_.at(v) == 1 ? 1 : ecc_.at(v);
  }

 private:
  int n_;
  std::vector<int> dist_;
  std::vector<int> ecc_;
  std::vector<int> component_size_;
  int diameter_ = 0;
  int radius_ = 0;
  int min_degree_ = 0;
  bool connected_ = true;
};

DistanceMatrix distances(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// True iff g is connected, has at least 3 vertices and no cutvertex.
bool is_two_connected(const Graph& g);

// BFS spanning tree from vertex 0; preserves labels.  Throws on
// disconnected input.
Graph spanning_tree(const Graph& g);

// Cartesian product; vertex (u, w) gets index u * h.n() + w and label
// "(<label_g>,<label_h>)".
Graph cartesian_product(const Graph& g, const Graph& h);

// Corona with K_1: one new pendant vertex attached to every vertex of g.
// Pendant of vertex v gets index g.n() + v and label "p_<label_v>".
Graph corona_k1(const Graph& g);

}  // namespace blab
