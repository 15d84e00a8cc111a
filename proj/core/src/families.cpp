#include "blab/families.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace blab {

namespace {

using Edges = std::vector<std::pair<int, int>>;

void need_args(const FamilySpec& spec, size_t lo, size_t hi, const char* what) {
  if (spec.args.size() < lo || spec.args.size() > hi)
    throw std::invalid_argument(std::string(what) + ": wrong number of arguments");
}

std::string idx(const std::string& stem, int i) { return stem + "_" + std::to_string(i); }

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(idx("v", i));
  return Graph(n, e, labels);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(idx("v", i));
  return Graph(n, e, labels);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(idx("v", i));
  return Graph(n, e, labels);
}

// Head "b", leg i runs b, v_i_1, .., v_i_{len-1}, l_i.
Graph make_spider(const std::vector<int>& legs) {
  if (legs.size() < 3) throw std::invalid_argument("spider: needs at least 3 legs");
  for (int len : legs)
    if (len < 1) throw std::invalid_argument("spider: leg lengths must be >= 1");
  Edges e;
  std::vector<std::string> labels{"b"};
  int next = 1;
  for (size_t i = 0; i < legs.size(); ++i) {
    int prev = 0;
    for (int j = 1; j < legs[i]; ++j) {
      labels.push_back("v_" + std::to_string(i + 1) + "_" + std::to_string(j));
      e.emplace_back(prev, next);
      prev = next++;
    }
    labels.push_back(idx("l", static_cast<int>(i + 1)));
    e.emplace_back(prev, next);
    ++next;
  }
  return Graph(next, e, labels);
}

// m rows, n columns, row-major; vertex (i, j) is labelled v_i_j (1-based).
Graph make_grid(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
  auto id = [n](int i, int j) { return i * n + j; };
  Edges e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) e.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < m) e.emplace_back(id(i, j), id(i + 1, j));
    }
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      labels.push_back("v_" + std::to_string(i) + "_" + std::to_string(j));
  return Graph(m * n, e, labels);
}

// Copy i holds the path l_i, v_i, b_i, v_i', l_i'; the b_i form a path.
Graph make_chain_tree(int k) {
  if (k < 1) throw std::invalid_argument("chain_tree_Tk: k must be >= 1");
  Edges e;
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) {
    int base = 5 * (i - 1);
    labels.push_back(idx("l", i));
    labels.push_back(idx("v", i));
    labels.push_back(idx("b", i));
    labels.push_back(idx("v", i) + "'");
    labels.push_back(idx("l", i) + "'");
    e.emplace_back(base + 0, base + 1);
    e.emplace_back(base + 1, base + 2);
    e.emplace_back(base + 2, base + 3);
    e.emplace_back(base + 3, base + 4);
    if (i > 1) e.emplace_back(base - 3, base + 2);
  }
  return Graph(5 * k, e, labels);
}

// Centre v with neighbours u and w; three endpaths (a, c, l) of length 3
// hang off each of u and w.  21 vertices, diameter 8.
void append_anchor_tree(Edges& e, std::vector<std::string>& labels,
                        const std::string& suffix) {
  int base = static_cast<int>(labels.size());
  labels.push_back("v" + suffix);
  labels.push_back("u" + suffix);
  labels.push_back("w" + suffix);
  e.emplace_back(base + 0, base + 1);
  e.emplace_back(base + 0, base + 2);
  int next = base + 3;
  for (const char* side : {"u", "w"}) {
    int anchor = base + (side[0] == 'u' ? 1 : 2);
    for (int j = 1; j <= 3; ++j) {
      std::string tail = std::string("_") + side + "_" + std::to_string(j) + suffix;
      labels.push_back("a" + tail);
      labels.push_back("c" + tail);
      labels.push_back("l" + tail);
      e.emplace_back(anchor, next);
      e.emplace_back(next, next + 1);
      e.emplace_back(next + 1, next + 2);
      next += 3;
    }
  }
}

Graph make_anchor_tree() {
  Edges e;
  std::vector<std::string> labels;
  append_anchor_tree(e, labels, "");
  return Graph(static_cast<int>(labels.size()), e, labels);
}

// 3k anchor-tree copies, centres joined in a path v_1 - v_2 - ... - v_3k.
Graph make_linked_trees(int k) {
  if (k < 1) throw std::invalid_argument("linked_trees_Hk: k must be >= 1");
  Edges e;
  std::vector<std::string> labels;
  for (int i = 1; i <= 3 * k; ++i) {
    int centre = static_cast<int>(labels.size());
    append_anchor_tree(e, labels, "_" + std::to_string(i));
    if (i > 1) e.emplace_back(centre - 21, centre);
  }
  return Graph(static_cast<int>(labels.size()), e, labels);
}

// Five layers U, W, X, Y, Z of k+1 vertices plus v.  U u {v}, Z, U u Z and
// {y_i} u Z induce cliques; X, Y, W are independent; u_i y_i, x_i y_i and
// w_i z_i are perfect matchings between the layers.  v is not adjacent to Z.
Graph make_layered(int k) {
  if (k < 1) throw std::invalid_argument("layered_Gk: k must be >= 1");
  int s = k + 1;
  auto u = [&](int i) { return 1 + i; };
  auto w = [&](int i) { return 1 + s + i; };
  auto x = [&](int i) { return 1 + 2 * s + i; };
  auto y = [&](int i) { return 1 + 3 * s + i; };
  auto z = [&](int i) { return 1 + 4 * s + i; };
  Edges e;
  for (int i = 0; i < s; ++i) {
    e.emplace_back(0, u(i));
    e.emplace_back(u(i), y(i));
    e.emplace_back(x(i), y(i));
    e.emplace_back(w(i), z(i));
    for (int j = i + 1; j < s; ++j) {
      e.emplace_back(u(i), u(j));
      e.emplace_back(z(i), z(j));
    }
    for (int j = 0; j < s; ++j) {
      e.emplace_back(u(i), z(j));
      e.emplace_back(y(i), z(j));
    }
  }
  std::vector<std::string> labels{"v"};
  for (const char* stem : {"u", "w", "x", "y", "z"})
    for (int i = 1; i <= s; ++i) labels.push_back(idx(stem, i));
  return Graph(5 * s + 1, e, labels);
}

// Three layers x, y, z, each inducing K_n; fibres x_i - y_i - z_i are paths.
Graph make_complete_times_p3(int n) {
  if (n < 1) throw std::invalid_argument("complete_times_P3: n must be >= 1");
  auto x = [&](int i) { return i; };
  auto y = [&](int i) { return n + i; };
  auto z = [&](int i) { return 2 * n + i; };
  Edges e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(x(i), y(i));
    e.emplace_back(y(i), z(i));
    for (int j = i + 1; j < n; ++j) {
      e.emplace_back(x(i), x(j));
      e.emplace_back(y(i), y(j));
      e.emplace_back(z(i), z(j));
    }
  }
  std::vector<std::string> labels;
  for (const char* stem : {"x", "y", "z"})
    for (int i = 1; i <= n; ++i) labels.push_back(idx(stem, i));
  return Graph(3 * n, e, labels);
}

// Two paths u_i, v_i, w_i joined by the edges v_1 v_2 and w_1 w_2.
Graph make_open_question_example() {
  Edges e{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}, {2, 5}};
  return Graph(6, e, {"u_1", "v_1", "w_1", "u_2", "v_2", "w_2"});
}

const std::map<std::string, FamilyKind>& name_map() {
  static const std::map<std::string, FamilyKind> m = {
      {"path", FamilyKind::path},
      {"cycle", FamilyKind::cycle},
      {"complete", FamilyKind::complete},
      {"spider", FamilyKind::spider},
      {"grid", FamilyKind::grid},
      {"cartesian_product", FamilyKind::cartesian_product},
      {"corona_k1", FamilyKind::corona_k1},
      {"chain_tree_Tk", FamilyKind::chain_tree_Tk},
      {"anchor_tree_T", FamilyKind::anchor_tree_T},
      {"linked_trees_Hk", FamilyKind::linked_trees_Hk},
      {"layered_Gk", FamilyKind::layered_Gk},
      {"complete_times_P3", FamilyKind::complete_times_P3},
      {"open_question_example", FamilyKind::open_question_example},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, kind] : name_map()) v.push_back(name);
    return v;
  }();
  return names;
}

std::string family_name(FamilyKind kind) {
  for (const auto& [name, k] : name_map())
    if (k == kind) return name;
  throw std::logic_error("unknown family kind");
}

FamilyKind family_from_name(const std::string& name) {
  auto it = name_map().find(name);
  if (it == name_map().end())
    throw std::invalid_argument("unknown family '" + name + "'");
  return it->second;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
      need_args(spec, 1, 1, "path");
      return make_path(spec.args[0]);
    case FamilyKind::cycle:
      need_args(spec, 1, 1, "cycle");
      return make_cycle(spec.args[0]);
    case FamilyKind::complete:
      need_args(spec, 1, 1, "complete");
      return make_complete(spec.args[0]);
    case FamilyKind::spider:
      need_args(spec, 3, 64, "spider");
      return make_spider(spec.args);
    case FamilyKind::grid:
      need_args(spec, 2, 2, "grid");
      return make_grid(spec.args[0], spec.args[1]);
    case FamilyKind::cartesian_product:
      need_args(spec, 2, 2, "cartesian_product");
      return cartesian_product(make_path(spec.args[0]), make_path(spec.args[1]));
    case FamilyKind::corona_k1:
      need_args(spec, 1, 1, "corona_k1");
      return corona_k1(make_complete(spec.args[0]));
    case FamilyKind::chain_tree_Tk:
      need_args(spec, 1, 1, "chain_tree_Tk");
      return make_chain_tree(spec.args[0]);
    case FamilyKind::anchor_tree_T:
      need_args(spec, 0, 0, "anchor_tree_T");
      return make_anchor_tree();
    case FamilyKind::linked_trees_Hk:
      need_args(spec, 1, 1, "linked_trees_Hk");
      return make_linked_trees(spec.args[0]);
    case FamilyKind::layered_Gk:
      need_args(spec, 1, 1, "layered_Gk");
      return make_layered(spec.args[0]);
    case FamilyKind::complete_times_P3:
      need_args(spec, 1, 1, "complete_times_P3");
      return make_complete_times_p3(spec.args[0]);
    case FamilyKind::open_question_example:
      need_args(spec, 0, 0, "open_question_example");
      return make_open_question_example();
  }
  throw std::logic_error("unknown family kind");
}

}  // namespace blab
