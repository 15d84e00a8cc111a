#include "blab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <stdexcept>
#include <thread>

namespace blab {

BoundDirection ParameterResult::bound_direction() const {
  if (optimal) return BoundDirection::exact;
  return is_minimization(kind) ? BoundDirection::upper : BoundDirection::lower;
}

std::pair<int, int> bounds(const Graph& g, ParameterKind kind) {
  DistanceMatrix d(g);
  if (!d.connected()) throw std::invalid_argument("bounds: graph is disconnected");
  int n = g.n();
  if (n == 1) return {1, 1};
  int diam = d.diameter();
  int delta = d.min_degree();
  switch (kind) {
    case ParameterKind::gamma_b: return {1, d.radius()};
    case ParameterKind::Gamma_b: return {diam, n - delta};
    case ParameterKind::alpha: return {1, n - delta};
    case ParameterKind::alpha_h: return {diam, n * diam};
    case ParameterKind::alpha_bn: return {diam, n - 1};
    case ParameterKind::alpha_bnr: return {diam, n - 1};
    case ParameterKind::alpha_bnd: return {diam, n - 1};
    case ParameterKind::i_bn: return {1, n - 1};
    case ParameterKind::alpha_hd: return {diam, n * diam};
  }
  throw std::logic_error("unknown kind");
}

namespace {

using Clock = std::chrono::steady_clock;

struct KindProfile {
  bool maximize = true;
  bool pairwise_bn = false;      // broadcasters pairwise d >= f(u) + f(v)
  bool pairwise_h = false;       // no broadcaster hears another
  bool needs_pb = false;         // every broadcaster keeps a private boundary
  bool needs_domination = false;
  bool needs_maximality = false;
  bool zero_one = false;
};

KindProfile profile_for(ParameterKind k) {
  KindProfile p;
  switch (k) {
    case ParameterKind::gamma_b:
      p.maximize = false;
      p.needs_domination = true;
      break;
    case ParameterKind::Gamma_b:
      p.needs_pb = true;
      p.needs_domination = true;
      break;
    case ParameterKind::alpha:
      p.pairwise_bn = true;
      p.zero_one = true;
      break;
    case ParameterKind::alpha_h:
      p.pairwise_h = true;
      break;
    case ParameterKind::alpha_bn:
      p.pairwise_bn = true;
      break;
    case ParameterKind::alpha_bnr:
      p.pairwise_bn = true;
      p.needs_pb = true;
      break;
    case ParameterKind::alpha_bnd:
      p.pairwise_bn = true;
      p.needs_pb = true;
      p.needs_domination = true;
      break;
    case ParameterKind::i_bn:
      p.maximize = false;
      p.pairwise_bn = true;
      p.needs_maximality = true;
      break;
    case ParameterKind::alpha_hd:
      p.pairwise_h = true;
      p.needs_pb = true;
      p.needs_domination = true;
      break;
  }
  return p;
}

int resolve_threads(const SolveOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("BROADCAST_LAB_THREADS")) {
    char* end = nullptr;
    long t = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && t >= 1 && t <= 256) return static_cast<int>(t);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

constexpr int kHuge = std::numeric_limits<int>::max() / 4;

struct Engine {
  int n;
  ParameterKind kind;
  KindProfile prof;
  std::vector<int> dist;             // n*n, flattened
  std::vector<int> caps_valid;       // eccentricity caps
  std::vector<int> caps_feas;        // plus the 0/1 restriction for alpha
  std::vector<int> caps_search;      // plus the tree heuristic (value phase)
  std::vector<std::vector<std::uint64_t>> ball;   // ball[v][s], s <= caps_valid[v]
  std::vector<std::vector<std::uint64_t>> shell;  // vertices at distance exactly s
  std::uint64_t full = 0;
  std::vector<int> order;            // descending eccentricity, ties by index
  int lower = 0, upper = 0;
  std::vector<int> seed;             // feasible incumbent; empty for i_bn

  int d(int u, int v) const { return dist[static_cast<size_t>(u) * n + v]; }

  Engine(const Graph& g, const DistanceMatrix& dm, ParameterKind k,
         const SolveOptions& opts)
      : n(g.n()), kind(k), prof(profile_for(k)) {
    if (n > 64) throw std::invalid_argument("solver: more than 64 vertices");
    dist.resize(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) dist[static_cast<size_t>(u) * n + v] = dm.dist(u, v);

    caps_valid.resize(n);
    for (int v = 0; v < n; ++v) caps_valid[v] = dm.strength_cap(v);
    caps_feas = caps_valid;
    if (prof.zero_one)
      for (int& c : caps_feas) c = std::min(c, 1);
    caps_search = caps_feas;
    bool tree = g.m() == n - 1 &&
                (k == ParameterKind::alpha_bn || k == ParameterKind::alpha_bnr);
    if (tree && opts.enable_tree_heuristics)
      for (int v = 0; v < n; ++v)
        if (g.degree(v) > 1) caps_search[v] = std::min(caps_search[v], 1);

    ball.resize(n);
    shell.resize(n);
    for (int v = 0; v < n; ++v) {
      ball[v].assign(caps_valid[v] + 1, 0);
      shell[v].assign(caps_valid[v] + 1, 0);
      for (int u = 0; u < n; ++u) {
        int duv = d(u, v);
        if (duv < 0 || duv > caps_valid[v]) continue;
        shell[v][duv] |= std::uint64_t{1} << u;
        for (int s = duv; s <= caps_valid[v]; ++s) ball[v][s] |= std::uint64_t{1} << u;
      }
    }
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    order.resize(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return dm.eccentricity(a) > dm.eccentricity(b);
    });

    auto b = bounds(g, kind);
    lower = b.first;
    upper = b.second;

    if (kind != ParameterKind::i_bn) {
      seed.assign(n, 0);
      if (n == 1) {
        seed[0] = 1;
      } else if (prof.maximize) {
        int p = order[0];  // peripheral: single full-eccentricity broadcast
        seed[p] = prof.zero_one ? 1 : dm.eccentricity(p);
      } else {
        int c = 0;  // central vertex covers everything at the radius
        for (int v = 0; v < n; ++v)
          if (dm.eccentricity(v) < dm.eccentricity(c)) c = v;
        seed[c] = dm.eccentricity(c);
      }
    }
  }
};

struct Shared {
  std::mutex mu;
  int best = 0;                      // guarded by mu
  std::vector<int> best_strengths;   // guarded by mu; empty = no incumbent
  std::atomic<int> best_relaxed{0};
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  long long node_budget = 0;
  bool use_deadline = false;
  Clock::time_point deadline{};
};

struct Worker {
  const Engine& e;
  Shared& sh;

  std::vector<int> strengths;
  std::vector<int> res;  // residual strength caps from pairwise constraints
  struct Frame {
    int vertex;
    int strength;
    std::uint64_t ball, red;
    std::uint64_t prev_u, prev_multi;
  };
  std::vector<Frame> committed;
  std::vector<std::vector<int>> res_undo;
  std::uint64_t U = 0, multi = 0;
  int weight = 0;
  long long pending = 0;
  bool stopped = false;

  bool lex_mode = false;
  int target = 0;
  int limit = 1;
  std::vector<std::vector<int>>* collect = nullptr;

  int root_workers = 1, root_index = 0;

  Worker(const Engine& eng, Shared& shared) : e(eng), sh(shared) {
    strengths.assign(e.n, 0);
    res.assign(e.n, kHuge);
  }

  int best() const { return sh.best_relaxed.load(std::memory_order_relaxed); }

  // Counts a node; true when the search has to unwind.
  bool tick() {
    if (stopped) return true;
    if (++pending >= 4096) flush();
    return stopped;
  }

  void flush() {
    if (pending > 0) {
      long long total = sh.nodes.fetch_add(pending, std::memory_order_relaxed) + pending;
      pending = 0;
      if (total > sh.node_budget) sh.stop.store(true, std::memory_order_relaxed);
      else if (sh.use_deadline && Clock::now() > sh.deadline)
        sh.stop.store(true, std::memory_order_relaxed);
    }
    if (sh.stop.load(std::memory_order_relaxed)) stopped = true;
  }

  int vertex_at(int pos) const { return lex_mode ? pos : e.order[pos]; }

  // Upper bound on the strength v could still take in any feasible
  // completion of the current partial assignment.
  int usable_cap(int v) const {
    int c = lex_mode ? e.caps_feas[v] : e.caps_search[v];
    if (e.prof.pairwise_bn || e.prof.pairwise_h) c = std::min(c, res[v]);
    if (c < 0) c = 0;
    if (e.prof.needs_pb) {
      // A strength whose whole boundary shell is already heard can never
      // keep a private boundary; the union only grows, so this cap is sound.
      while (c >= 1) {
        std::uint64_t zone = c == 1 ? e.ball[v][1] : e.shell[v][c];
        if (zone & ~U) break;
        --c;
      }
    }
    return c;
  }

  bool pb_zone_open(int v, int s) const {
    std::uint64_t zone = s == 1 ? e.ball[v][1] : e.shell[v][s];
    return (zone & ~U) != 0;
  }

  void commit(int v, int s) {
    Frame fr;
    fr.vertex = v;
    fr.strength = s;
    fr.ball = e.ball[v][s];
    fr.red = s >= 2 ? e.ball[v][s - 1] : 0;
    fr.prev_u = U;
    fr.prev_multi = multi;
    multi |= U & fr.ball;
    U |= fr.ball;
    weight += s;
    strengths[v] = s;
    committed.push_back(fr);
    if (e.prof.pairwise_bn || e.prof.pairwise_h) {
      res_undo.push_back(res);
      for (int w = 0; w < e.n; ++w) {
        if (w == v) continue;
        int duv = e.d(v, w);
        if (e.prof.pairwise_bn) {
          res[w] = std::min(res[w], duv - s);
        } else {
          res[w] = duv <= s ? 0 : std::min(res[w], duv - 1);
        }
      }
    }
  }

  void rollback() {
    const Frame& fr = committed.back();
    U = fr.prev_u;
    multi = fr.prev_multi;
    weight -= fr.strength;
    strengths[fr.vertex] = 0;
    committed.pop_back();
    if (e.prof.pairwise_bn || e.prof.pairwise_h) {
      res = res_undo.back();
      res_undo.pop_back();
    }
  }

  bool committed_pbs_alive() const {
    for (const Frame& fr : committed)
      if ((fr.ball & ~multi & ~fr.red) == 0) return false;
    return true;
  }

  bool leaf_maximal() const {
    for (int w = 0; w < e.n; ++w) {
      int s1 = strengths[w] + 1;
      if (s1 > e.caps_valid[w]) continue;
      bool extension = true;
      for (const Frame& fr : committed) {
        if (fr.vertex == w) continue;
        if (e.d(w, fr.vertex) < s1 + fr.strength) {
          extension = false;
          break;
        }
      }
      if (extension) return false;
    }
    return true;
  }

  void leaf() {
    if (e.prof.needs_domination && U != e.full) return;
    if ((e.prof.needs_pb || e.prof.zero_one) && weight == 0) return;
    if (e.prof.needs_maximality && !leaf_maximal()) return;
    if (lex_mode) {
      if (weight != target) return;
      collect->push_back(strengths);
      if (static_cast<int>(collect->size()) >= limit) stopped = true;
      return;
    }
    std::lock_guard<std::mutex> lk(sh.mu);
    bool better = sh.best_strengths.empty()
                      ? true
                      : (e.prof.maximize ? weight > sh.best : weight < sh.best);
    if (better) {
      sh.best = weight;
      sh.best_strengths = strengths;
      sh.best_relaxed.store(weight, std::memory_order_relaxed);
    }
  }

  void dfs(int pos) {
    if (tick()) return;
    if (lex_mode) {
      if (weight > target) return;
      long long pot = weight;
      for (int i = pos; i < e.n && pot < target; ++i) pot += usable_cap(vertex_at(i));
      if (pot < target) return;
    } else if (e.prof.maximize) {
      if (weight > e.upper) return;
      int inc = best();
      long long pot = weight;
      for (int i = pos; i < e.n && pot <= inc; ++i) pot += usable_cap(vertex_at(i));
      if (pot <= inc) return;
    } else {
      int inc = best();
      int extra = e.prof.needs_domination && U != e.full ? 1 : 0;
      if (weight + extra >= inc) return;
    }
    if (pos == e.n) {
      leaf();
      return;
    }

    int v = vertex_at(pos);
    int cap = usable_cap(v);
    bool ascending = lex_mode || !e.prof.maximize;
    int choice_no = 0;
    for (int i = 0; i <= cap; ++i) {
      int s = ascending ? i : cap - i;
      if (pos == 0 && root_workers > 1 && choice_no++ % root_workers != root_index)
        continue;
      if (s == 0) {
        dfs(pos + 1);
      } else {
        if (e.prof.needs_pb && !pb_zone_open(v, s)) continue;
        commit(v, s);
        if (!e.prof.needs_pb || committed_pbs_alive()) dfs(pos + 1);
        rollback();
      }
      if (stopped) return;
    }
  }
};

void run_phase_a(const Engine& e, Shared& sh, const SolveOptions& opts) {
  int nthreads = resolve_threads(opts);
  int root_choices = e.caps_search[e.order[0]] + 1;
  nthreads = std::min(nthreads, root_choices);
  if (nthreads <= 1 || e.n < 4) {
    Worker w(e, sh);
    w.dfs(0);
    w.flush();
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t)
    threads.emplace_back([&e, &sh, t, nthreads] {
      Worker w(e, sh);
      w.root_workers = nthreads;
      w.root_index = t;
      w.dfs(0);
      w.flush();
    });
  for (auto& th : threads) th.join();
}

bool kind_feasible(ParameterKind kind, const Broadcast& f, const Graph& g,
                   const DistanceMatrix& d) {
  switch (kind) {
    case ParameterKind::gamma_b:
      return is_dominating(f, g, d);
    case ParameterKind::Gamma_b:
      return is_minimal_dominating(f, g, d);
    case ParameterKind::alpha: {
      for (int v = 0; v < f.n(); ++v)
        if (f.strength(v) > 1) return false;
      return f.weight() >= 1 && bn_pairwise_criterion(f, g, d);
    }
    case ParameterKind::alpha_h:
      return is_hearing_independent(f, g, d);
    case ParameterKind::alpha_bn:
      return bn_pairwise_criterion(f, g, d);
    case ParameterKind::alpha_bnr:
      return bn_pairwise_criterion(f, g, d) && is_irredundant(f, g, d);
    case ParameterKind::alpha_bnd:
      return bn_pairwise_criterion(f, g, d) && is_minimal_dominating(f, g, d);
    case ParameterKind::i_bn:
      return bn_pairwise_criterion(f, g, d) && is_maximal_bn_independent(f, g, d);
    case ParameterKind::alpha_hd:
      return is_hearing_independent(f, g, d) && is_minimal_dominating(f, g, d);
  }
  throw std::logic_error("unknown kind");
}

}  // namespace

ParameterResult solve(const Graph& g, ParameterKind kind, const SolveOptions& opts) {
  auto t0 = Clock::now();
  DistanceMatrix dm(g);
  if (!dm.connected()) throw std::invalid_argument("solve: graph is disconnected");
  KindProfile prof = profile_for(kind);
  int cap = prof.maximize ? opts.max_vertices_maximize : opts.max_vertices_minimize;
  if (g.n() > cap)
    throw std::invalid_argument("solve: vertex cap exceeded (" + std::to_string(g.n()) +
                                " > " + std::to_string(cap) + ")");

  Engine e(g, dm, kind, opts);
  Shared sh;
  sh.node_budget = opts.node_budget;
  if (opts.time_budget_seconds > 0) {
    sh.use_deadline = true;
    sh.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(opts.time_budget_seconds));
  }
  if (!e.seed.empty()) {
    sh.best_strengths = e.seed;
    for (int s : e.seed) sh.best += s;
  } else {
    sh.best = prof.maximize ? -1 : kHuge;
  }
  sh.best_relaxed.store(sh.best);

  run_phase_a(e, sh, opts);

  ParameterResult r;
  r.kind = kind;
  r.nodes_explored = sh.nodes.load();
  bool exhausted = sh.stop.load();
  if (exhausted) {
    r.optimal = false;
    if (!sh.best_strengths.empty()) {
      r.value = sh.best;
      r.witness = Broadcast(sh.best_strengths);
    } else {
      r.value = 0;
      r.witness = Broadcast::zero(g.n());
    }
  } else {
    if (sh.best_strengths.empty())
      throw std::logic_error("complete search found no feasible broadcast");
    r.optimal = true;
    r.value = sh.best;
    // Witness phase: lexicographically least optimal vector, index order,
    // ascending strengths, heuristics off.
    Shared sh2;
    sh2.node_budget = opts.node_budget;
    sh2.use_deadline = sh.use_deadline;
    sh2.deadline = Clock::now() + (sh.deadline - t0);
    std::vector<std::vector<int>> found;
    Worker wb(e, sh2);
    wb.lex_mode = true;
    wb.target = r.value;
    wb.limit = 1;
    wb.collect = &found;
    wb.dfs(0);
    wb.flush();
    r.nodes_explored += sh2.nodes.load();
    r.witness = Broadcast(found.empty() ? sh.best_strengths : found[0]);

    if (r.value < e.lower || r.value > e.upper)
      throw std::logic_error("optimal value escaped its a-priori bounds");
    if (!kind_feasible(kind, r.witness, g, dm))
      throw std::logic_error("witness failed its feasibility predicates");
  }
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

std::vector<Broadcast> enumerate_optimal(const Graph& g, ParameterKind kind, int limit,
                                         const SolveOptions& opts) {
  if (g.n() > 12)
    throw std::invalid_argument("enumerate_optimal: supported for n <= 12 only");
  if (limit < 1) throw std::invalid_argument("enumerate_optimal: limit must be >= 1");
  ParameterResult base = solve(g, kind, opts);
  if (!base.optimal)
    throw std::runtime_error("enumerate_optimal: budget exhausted before optimality");
  DistanceMatrix dm(g);
  Engine e(g, dm, kind, opts);
  Shared sh;
  sh.node_budget = opts.node_budget;
  std::vector<std::vector<int>> found;
  Worker w(e, sh);
  w.lex_mode = true;
  w.target = base.value;
  w.limit = limit;
  w.collect = &found;
  w.dfs(0);
  std::vector<Broadcast> out;
  out.reserve(found.size());
  for (auto& f : found) out.emplace_back(std::move(f));
  return out;
}

ParameterResult independence_number(const Graph& g, int max_vertices) {
  auto t0 = Clock::now();
  if (g.n() > max_vertices)
    throw std::invalid_argument("independence_number: vertex cap exceeded");
  if (g.n() > 64) throw std::invalid_argument("independence_number: more than 64 vertices");
  int n = g.n();
  std::vector<std::uint64_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  int best = 0;
  std::uint64_t best_set = 0;
  long long nodes = 0;

  // Plain MIS branch and bound: greedy inclusion of degree <= 1 vertices,
  // branch on the highest-degree remaining vertex.
  auto lowest = [](std::uint64_t m) { return __builtin_ctzll(m); };
  std::function<void(std::uint64_t, int, std::uint64_t)> go =
      [&](std::uint64_t cand, int chosen, std::uint64_t set) {
        ++nodes;
        if (chosen + __builtin_popcountll(cand) <= best) return;
        if (cand == 0) {
          best = chosen;
          best_set = set;
          return;
        }
        int pick = -1, pick_deg = -1;
        for (std::uint64_t m = cand; m;) {
          int v = lowest(m);
          m &= m - 1;
          int deg = __builtin_popcountll(nbr[v] & cand);
          if (deg <= 1) {  // always safe to take
            go(cand & ~(nbr[v] | (std::uint64_t{1} << v)), chosen + 1,
               set | (std::uint64_t{1} << v));
            return;
          }
          if (deg > pick_deg) {
            pick_deg = deg;
            pick = v;
          }
        }
        go(cand & ~(nbr[pick] | (std::uint64_t{1} << pick)), chosen + 1,
           set | (std::uint64_t{1} << pick));
        go(cand & ~(std::uint64_t{1} << pick), chosen, set);
      };
  go(all, 0, 0);

  ParameterResult r;
  r.kind = ParameterKind::alpha;
  r.value = best;
  std::vector<int> s(n, 0);
  for (int v = 0; v < n; ++v)
    if (best_set >> v & 1) s[v] = 1;
  r.witness = Broadcast(std::move(s));
  r.optimal = true;
  r.nodes_explored = nodes;
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

}  // namespace blab
