#include "blab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace blab::oracle {

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

int eccentricity(const std::vector<std::vector<int>>& d, int v) {
  int e = 0;
  for (int u = 0; u < static_cast<int>(d.size()); ++u)
    if (d[v][u] < INF) e = std::max(e, d[v][u]);
  return e;
}

int strength_cap(const std::vector<std::vector<int>>& d, int v) {
  int reach = 0;
  for (int u = 0; u < static_cast<int>(d.size()); ++u)
    if (d[v][u] < INF) ++reach;
  return reach == 1 ? 1 : eccentricity(d, v);
}

bool dominating(const std::vector<int>& f, const std::vector<std::vector<int>>& d) {
  int n = static_cast<int>(f.size());
  for (int u = 0; u < n; ++u) {
    bool heard = false;
    for (int v = 0; v < n && !heard; ++v) heard = f[v] >= 1 && d[u][v] <= f[v];
    if (!heard) return false;
  }
  return true;
}

bool hearing_independent(const std::vector<int>& f, const std::vector<std::vector<int>>& d) {
  int n = static_cast<int>(f.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && f[u] >= 1 && f[v] >= 1 && d[u][v] <= f[v]) return false;
  return true;
}

bool bn_independent(const std::vector<int>& f, const std::vector<std::vector<int>>& d) {
  int n = static_cast<int>(f.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (f[u] < 1 || f[v] < 1) continue;
      for (int x = 0; x < n; ++x)
        if (d[x][u] <= f[u] && d[x][v] <= f[v] &&
            !(d[x][u] == f[u] && d[x][v] == f[v]))
          return false;
    }
  return true;
}

std::vector<int> private_boundary(const std::vector<int>& f,
                                  const std::vector<std::vector<int>>& d, int v) {
  int n = static_cast<int>(f.size());
  std::vector<int> reduced = f;
  --reduced[v];
  std::vector<int> pb;
  for (int u = 0; u < n; ++u) {
    if (d[u][v] > f[v]) continue;  // outside N_f(v)
    bool covered = false;
    for (int w = 0; w < n && !covered; ++w)
      covered = reduced[w] >= 1 && d[u][w] <= reduced[w];
    if (!covered) pb.push_back(u);
  }
  return pb;
}

bool irredundant(const std::vector<int>& f, const std::vector<std::vector<int>>& d) {
  int n = static_cast<int>(f.size());
  bool any = false;
  for (int v = 0; v < n; ++v) {
    if (f[v] < 1) continue;
    any = true;
    if (private_boundary(f, d, v).empty()) return false;
  }
  return any;
}

bool maximal_bn_independent(const std::vector<int>& f, const std::vector<std::vector<int>>& d) {
  int n = static_cast<int>(f.size());
  for (int w = 0; w < n; ++w) {
    if (f[w] >= strength_cap(d, w)) continue;
    std::vector<int> g = f;
    ++g[w];
    if (bn_independent(g, d)) return false;
  }
  return true;
}

bool minimal_dominating_full(const std::vector<int>& f, const std::vector<std::vector<int>>& d) {
  if (!dominating(f, d)) return false;
  // Odometer over every sub-broadcast, counting down from f to zero.
  std::vector<int> g = f;
  while (true) {
    int i = 0;
    while (i < static_cast<int>(g.size()) && g[i] == 0) {
      g[i] = f[i];
      ++i;
    }
    if (i == static_cast<int>(g.size())) break;
    --g[i];
    if (!(g == f) && dominating(g, d)) return false;
  }
  return true;
}

bool feasible_for(ParameterKind kind, const std::vector<int>& f,
                  const std::vector<std::vector<int>>& d) {
  switch (kind) {
    case ParameterKind::gamma_b:
      return dominating(f, d);
    case ParameterKind::Gamma_b:
      return dominating(f, d) && irredundant(f, d);
    case ParameterKind::alpha:
      return *std::max_element(f.begin(), f.end()) <= 1 && bn_independent(f, d) &&
             std::count(f.begin(), f.end(), 1) >= 1;
    case ParameterKind::alpha_h:
      return hearing_independent(f, d);
    case ParameterKind::alpha_bn:
      return bn_independent(f, d);
    case ParameterKind::alpha_bnr:
      return bn_independent(f, d) && irredundant(f, d);
    case ParameterKind::alpha_bnd:
      return bn_independent(f, d) && dominating(f, d) && irredundant(f, d);
    case ParameterKind::i_bn:
      return bn_independent(f, d) && maximal_bn_independent(f, d);
    case ParameterKind::alpha_hd:
      return hearing_independent(f, d) && dominating(f, d) && irredundant(f, d);
  }
  throw std::logic_error("unknown kind");
}

void for_each_vector(const std::vector<int>& caps,
                     const std::function<void(const std::vector<int>&)>& fn) {
  int n = static_cast<int>(caps.size());
  std::vector<int> f(n, 0);
  while (true) {
    fn(f);
    int i = n - 1;
    while (i >= 0 && f[i] == caps[i]) f[i--] = 0;
    if (i < 0) return;
    ++f[i];
  }
}

namespace {

std::vector<int> vector_caps(const Graph& g, const std::vector<std::vector<int>>& d,
                             std::uint64_t max_vectors) {
  std::vector<int> caps(g.n());
  std::uint64_t total = 1;
  for (int v = 0; v < g.n(); ++v) {
    caps[v] = strength_cap(d, v);
    total *= static_cast<std::uint64_t>(caps[v]) + 1;
    if (total > max_vectors)
      throw std::invalid_argument("exhaustive enumeration would exceed the vector cap");
  }
  return caps;
}

}  // namespace

std::array<KindOptimum, 9> exhaustive_optima(const Graph& g, std::uint64_t max_vectors) {
  auto d = floyd_warshall(g);
  auto caps = vector_caps(g, d, max_vectors);
  std::array<KindOptimum, 9> out{};
  const auto& kinds = all_parameter_kinds();
  for_each_vector(caps, [&](const std::vector<int>& f) {
    int weight = 0;
    for (int s : f) weight += s;
    for (size_t i = 0; i < kinds.size(); ++i) {
      if (!feasible_for(kinds[i], f, d)) continue;
      auto& opt = out[i];
      bool better =
          !opt.feasible_exists ||
          (is_minimization(kinds[i]) ? weight < opt.value : weight > opt.value);
      if (better) {
        opt.feasible_exists = true;
        opt.value = weight;
        opt.lex_least_witness = f;  // lex iteration order: first hit is least
      }
    }
  });
  return out;
}

KindOptimum exhaustive_optimum(const Graph& g, ParameterKind kind,
                               std::uint64_t max_vectors) {
  auto all = exhaustive_optima(g, max_vectors);
  const auto& kinds = all_parameter_kinds();
  for (size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i] == kind) return all[i];
  throw std::logic_error("unknown kind");
}

std::vector<std::vector<int>> exhaustive_optimal_set(const Graph& g, ParameterKind kind,
                                                     std::uint64_t max_vectors) {
  auto best = exhaustive_optimum(g, kind, max_vectors);
  std::vector<std::vector<int>> out;
  if (!best.feasible_exists) return out;
  auto d = floyd_warshall(g);
  auto caps = vector_caps(g, d, max_vectors);
  for_each_vector(caps, [&](const std::vector<int>& f) {
    int weight = 0;
    for (int s : f) weight += s;
    if (weight == best.value && feasible_for(kind, f, d)) out.push_back(f);
  });
  return out;
}

}  // namespace blab::oracle
