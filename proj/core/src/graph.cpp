#include "blab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace blab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<std::string> labels)
    : n_(n), adj_(std::max(n, 0)), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  if (labels_.empty()) {
    labels_.reserve(n);
    for (int v = 0; v < n; ++v) labels_.push_back("v_" + std::to_string(v + 1));
  }
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count does not match vertex count");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("vertex labels must be unique");
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::vertex(const std::string& label) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  throw std::invalid_argument("no vertex labelled '" + label + "'");
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.n()) {
  dist_.assign(static_cast<size_t>(n_) * n_, UNREACHABLE);
  ecc_.assign(n_, 0);
  component_size_.assign(n_, 0);

  for (int s = 0; s < n_; ++s) {
    auto* row = &dist_[static_cast<size_t>(s) * n_];
    row[s] = 0;
    std::queue<int> q;
    q.push(s);
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (row[w] == UNREACHABLE) {
          row[w] = row[u] + 1;
          ecc_[s] = std::max(ecc_[s], row[w]);
          ++reached;
          q.push(w);
        }
      }
    }
    component_size_[s] = reached;
    if (reached < n_) connected_ = false;
  }

  diameter_ = 0;
  radius_ = n_ == 0 ? 0 : ecc_[0];
  for (int v = 0; v < n_; ++v) {
    diameter_ = std::max(diameter_, ecc_[v]);
    radius_ = std::min(radius_, ecc_[v]);
  }
  min_degree_ = n_ == 0 ? 0 : g.degree(0);
  for (int v = 0; v < n_; ++v) min_degree_ = std::min(min_degree_, g.degree(v));
}

DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == g.n();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = side[u] ^ 1;
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Hopcroft-Tarjan lowpoint scan, iterative to keep deep paths safe.
bool has_cutvertex(const Graph& g) {
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<int> stack;
  stack.push_back(0);
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    int u = stack.back();
    if (next_child[u] < g.degree(u)) {
      int w = g.neighbors(u)[next_child[u]++];
      if (disc[w] == -1) {
        parent[w] = u;
        if (u == 0) ++root_children;
        disc[w] = low[w] = timer++;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      stack.pop_back();
      int p = parent[u];
      if (p != -1) {
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) return true;
      }
    }
  }
  return root_children > 1;
}

}  // namespace

bool is_two_connected(const Graph& g) {
  if (g.n() < 3) return false;
  if (!is_connected(g)) return false;
  return !has_cutvertex(g);
}

Graph spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("spanning_tree: graph is disconnected");
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        tree_edges.emplace_back(u, w);
        q.push(w);
      }
  }
  return Graph(g.n(), tree_edges, g.labels());
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  int n = g.n() * h.n();
  auto id = [&](int u, int w) { return u * h.n() + w; };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (auto [w1, w2] : h.edges()) edges.emplace_back(id(u, w1), id(u, w2));
  for (int w = 0; w < h.n(); ++w)
    for (auto [u1, u2] : g.edges()) edges.emplace_back(id(u1, w), id(u2, w));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int u = 0; u < g.n(); ++u)
    for (int w = 0; w < h.n(); ++w)
      labels.push_back("(" + g.label(u) + "," + h.label(w) + ")");
  return Graph(n, edges, std::move(labels));
}

Graph corona_k1(const Graph& g) {
  int n = g.n();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  std::vector<std::string> labels = g.labels();
  for (int v = 0; v < n; ++v) labels.push_back("p_" + g.label(v));
  return Graph(2 * n, edges, std::move(labels));
}

}  // namespace blab
