#include "blab/broadcast.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace blab {

Broadcast::Broadcast(std::vector<int> strengths) : s_(std::move(strengths)) {
  for (int v : s_)
    if (v < 0) throw std::invalid_argument("broadcast strengths must be nonnegative");
  weight_ = std::accumulate(s_.begin(), s_.end(), 0);
}

Broadcast Broadcast::zero(int n) { return Broadcast(std::vector<int>(n, 0)); }

std::vector<int> Broadcast::broadcasters() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (s_[v] >= 1) out.push_back(v);
  return out;
}

std::vector<int> Broadcast::strength_one() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (s_[v] == 1) out.push_back(v);
  return out;
}

std::vector<int> Broadcast::strength_two_plus() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (s_[v] >= 2) out.push_back(v);
  return out;
}

Broadcast Broadcast::with_strength(int v, int value) const {
  std::vector<int> s = s_;
  s.at(v) = value;
  return Broadcast(std::move(s));
}

bool is_valid(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  if (f.n() != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (f.strength(v) < 0 || f.strength(v) > d.strength_cap(v)) return false;
  return true;
}

void require_valid(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  if (f.n() != g.n())
    throw std::invalid_argument("broadcast size does not match graph");
  for (int v = 0; v < g.n(); ++v)
    if (f.strength(v) < 0 || f.strength(v) > d.strength_cap(v))
      throw std::invalid_argument("strength at vertex " + std::to_string(v) +
                                  " exceeds its cap");
}

const std::vector<ParameterKind>& all_parameter_kinds() {
  static const std::vector<ParameterKind> kinds = {
      ParameterKind::gamma_b,   ParameterKind::Gamma_b,   ParameterKind::alpha,
      ParameterKind::alpha_h,   ParameterKind::alpha_bn,  ParameterKind::alpha_bnr,
      ParameterKind::alpha_bnd, ParameterKind::i_bn,      ParameterKind::alpha_hd,
  };
  return kinds;
}

std::string parameter_name(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::gamma_b: return "gamma_b";
    case ParameterKind::Gamma_b: return "Gamma_b";
    case ParameterKind::alpha: return "alpha";
    case ParameterKind::alpha_h: return "alpha_h";
    case ParameterKind::alpha_bn: return "alpha_bn";
    case ParameterKind::alpha_bnr: return "alpha_bnr";
    case ParameterKind::alpha_bnd: return "alpha_bnd";
    case ParameterKind::i_bn: return "i_bn";
    case ParameterKind::alpha_hd: return "alpha_hd";
  }
  throw std::logic_error("unknown kind");
}

ParameterKind parameter_from_name(const std::string& name) {
  for (ParameterKind k : all_parameter_kinds())
    if (parameter_name(k) == name) return k;
  throw std::invalid_argument("unknown parameter '" + name + "'");
}

bool is_minimization(ParameterKind kind) {
  return kind == ParameterKind::gamma_b || kind == ParameterKind::i_bn;
}

namespace {

// Number of broadcasters that reach each vertex.
std::vector<int> hear_counts(const Broadcast& f, const DistanceMatrix& d) {
  std::vector<int> count(f.n(), 0);
  for (int v = 0; v < f.n(); ++v) {
    if (f.strength(v) < 1) continue;
    for (int u = 0; u < f.n(); ++u)
      if (d.reachable(u, v) && d.dist(u, v) <= f.strength(v)) ++count[u];
  }
  return count;
}

}  // namespace

const BroadcasterSets& BroadcastAnalysis::sets_for(int v) const {
  for (const auto& s : sets_)
    if (s.vertex == v) return s;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not broadcasting");
}

std::vector<std::pair<int, int>> BroadcastAnalysis::uncovered_edges() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (covered_by_[i].empty()) out.push_back(edges_[i]);
  return out;
}

BroadcastAnalysis analyze(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  require_valid(f, g, d);
  BroadcastAnalysis a;
  auto count = hear_counts(f, d);

  for (int u = 0; u < g.n(); ++u)
    if (count[u] == 0) a.unheard_.push_back(u);

  for (int v = 0; v < g.n(); ++v) {
    int s = f.strength(v);
    if (s < 1) continue;
    BroadcasterSets bs;
    bs.vertex = v;
    bs.strength = s;
    for (int u = 0; u < g.n(); ++u) {
      if (!d.reachable(u, v) || d.dist(u, v) > s) continue;
      bs.ball.push_back(u);
      if (d.dist(u, v) == s) bs.boundary.push_back(u);
      if (count[u] == 1) bs.private_neighbours.push_back(u);
      bool covered_by_others = count[u] >= 2;
      bool covered_by_reduced = s >= 2 && d.dist(u, v) <= s - 1;
      if (!covered_by_others && !covered_by_reduced) bs.private_boundary.push_back(u);
    }
    // Internal consistency: with strength >= 2 the decrement rule must land
    // exactly on boundary-and-private; the boundary itself is empty only for
    // a strength-1 broadcaster alone in its component.
    if (s >= 2) {
      std::vector<int> meet;
      std::set_intersection(bs.boundary.begin(), bs.boundary.end(),
                            bs.private_neighbours.begin(), bs.private_neighbours.end(),
                            std::back_inserter(meet));
      if (meet != bs.private_boundary)
        throw std::logic_error("private boundary disagrees with boundary-private meet");
    }
    if (bs.boundary.empty() && d.component_size(v) > 1)
      throw std::logic_error("boundary of an in-cap broadcaster cannot be empty");
    a.sets_.push_back(std::move(bs));
  }

  a.edges_ = g.edges();
  a.covered_by_.assign(a.edges_.size(), {});
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    auto [p, q] = a.edges_[i];
    for (const auto& bs : a.sets_) {
      int dp = d.reachable(p, bs.vertex) ? d.dist(p, bs.vertex) : -1;
      int dq = d.reachable(q, bs.vertex) ? d.dist(q, bs.vertex) : -1;
      if (dp < 0 || dq < 0 || dp > bs.strength || dq > bs.strength) continue;
      if (dp < bs.strength || dq < bs.strength) a.covered_by_[i].push_back(bs.vertex);
    }
  }
  return a;
}

bool is_dominating(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  require_valid(f, g, d);
  for (int u = 0; u < g.n(); ++u) {
    bool heard = false;
    for (int v = 0; v < g.n() && !heard; ++v)
      heard = f.strength(v) >= 1 && d.reachable(u, v) && d.dist(u, v) <= f.strength(v);
    if (!heard) return false;
  }
  return true;
}

bool is_irredundant(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  require_valid(f, g, d);
  if (f.weight() == 0) return false;
  auto count = hear_counts(f, d);
  for (int v = 0; v < g.n(); ++v) {
    int s = f.strength(v);
    if (s < 1) continue;
    bool has_private = false;
    for (int u = 0; u < g.n() && !has_private; ++u) {
      if (!d.reachable(u, v) || d.dist(u, v) > s) continue;
      has_private = count[u] == 1 && !(s >= 2 && d.dist(u, v) <= s - 1);
    }
    if (!has_private) return false;
  }
  return true;
}

bool is_minimal_dominating(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  return is_dominating(f, g, d) && is_irredundant(f, g, d);
}

bool is_minimal_dominating_oracle(const Broadcast& f, const Graph& g,
                                  const DistanceMatrix& d) {
  if (!is_dominating(f, g, d))
    throw std::invalid_argument("is_minimal_dominating_oracle needs a dominating broadcast");
  // Single-step decrements suffice: domination is monotone in strengths, so
  // a dominating proper sub-broadcast forces a dominating one-step decrement.
  for (int v = 0; v < g.n(); ++v) {
    if (f.strength(v) < 1) continue;
    if (is_dominating(f.with_strength(v, f.strength(v) - 1), g, d)) return false;
  }
  return true;
}

bool is_hearing_independent(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  require_valid(f, g, d);
  auto vs = f.broadcasters();
  for (int u : vs)
    for (int v : vs)
      if (u != v && d.reachable(u, v) && d.dist(u, v) <= f.strength(v)) return false;
  return true;
}

bool is_bn_independent(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  require_valid(f, g, d);
  auto vs = f.broadcasters();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      int u = vs[i], v = vs[j];
      for (int x = 0; x < g.n(); ++x) {
        if (!d.reachable(x, u) || !d.reachable(x, v)) continue;
        if (d.dist(x, u) > f.strength(u) || d.dist(x, v) > f.strength(v)) continue;
        if (d.dist(x, u) != f.strength(u) || d.dist(x, v) != f.strength(v)) return false;
      }
    }
  return true;
}

bool bn_pairwise_criterion(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  require_valid(f, g, d);
  auto vs = f.broadcasters();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      int u = vs[i], v = vs[j];
      if (d.reachable(u, v) && d.dist(u, v) < f.strength(u) + f.strength(v)) return false;
    }
  return true;
}

bool is_maximal_bn_independent(const Broadcast& f, const Graph& g, const DistanceMatrix& d) {
  if (!bn_pairwise_criterion(f, g, d))
    throw std::invalid_argument("is_maximal_bn_independent needs a bn-independent broadcast");
  // bn-independence is downward closed, so one-step increments are a complete
  // maximality test.
  auto vs = f.broadcasters();
  for (int w = 0; w < g.n(); ++w) {
    if (f.strength(w) >= d.strength_cap(w)) continue;
    int sw = f.strength(w) + 1;
    bool extension_ok = true;
    for (int v : vs) {
      if (v == w) continue;
      if (d.reachable(w, v) && d.dist(w, v) < sw + f.strength(v)) {
        extension_ok = false;
        break;
      }
    }
    if (extension_ok) return false;
  }
  return true;
}

bool maximal_bn_characterization_i(const Broadcast& f, const Graph& g,
                                   const DistanceMatrix& d) {
  if (!bn_pairwise_criterion(f, g, d))
    throw std::invalid_argument("characterization needs a bn-independent broadcast");
  if (!is_dominating(f, g, d)) return false;
  auto a = analyze(f, g, d);
  if (a.broadcasters().size() <= 1) return true;
  for (const auto& bs : a.broadcasters()) {
    std::vector<int> rest;
    std::set_difference(bs.boundary.begin(), bs.boundary.end(),
                        bs.private_boundary.begin(), bs.private_boundary.end(),
                        std::back_inserter(rest));
    if (rest.empty()) return false;
  }
  return true;
}

bool maximal_bn_characterization_ii(const Broadcast& f, const Graph& g,
                                    const DistanceMatrix& d) {
  if (!bn_pairwise_criterion(f, g, d))
    throw std::invalid_argument("characterization needs a bn-independent broadcast");
  auto vs = f.broadcasters();
  if (vs.size() < 2)
    throw std::invalid_argument("characterization (ii) needs at least two broadcasters");
  auto a = analyze(f, g, d);
  // Components of the graph with its uncovered edges removed.
  std::vector<std::vector<int>> adj(g.n());
  for (size_t i = 0; i < a.edges().size(); ++i) {
    if (a.covered_by()[i].empty()) continue;
    auto [p, q] = a.edges()[i];
    adj[p].push_back(q);
    adj[q].push_back(p);
  }
  std::vector<int> comp(g.n(), -1);
  int ncomp = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<int> per_comp(ncomp, 0);
  for (int v : vs) ++per_comp[comp[v]];
  for (int c = 0; c < ncomp; ++c)
    if (per_comp[c] < 2) return false;
  return true;
}

Ordering compare(const Broadcast& f, const Broadcast& h) {
  if (f.n() != h.n()) throw std::invalid_argument("compare: size mismatch");
  bool le = true, ge = true;
  for (int v = 0; v < f.n(); ++v) {
    if (f.strength(v) > h.strength(v)) le = false;
    if (f.strength(v) < h.strength(v)) ge = false;
  }
  if (le && ge) return Ordering::equal;
  if (le) return Ordering::less;
  if (ge) return Ordering::greater;
  return Ordering::incomparable;
}

}  // namespace blab
