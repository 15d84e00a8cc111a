#include "blab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "blab/broadcast.hpp"
#include "blab/certificates.hpp"
#include "blab/families.hpp"
#include "blab/oracle.hpp"

namespace blab {

namespace {

using Clock = std::chrono::steady_clock;

// Deterministic across platforms: mt19937_64 has a pinned sequence and the
// rejection step avoids modulo bias without platform-dependent shortcuts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t accept = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= accept);
    return lo + static_cast<int>(r % span);
  }

  bool coin() { return gen_() & 1; }

 private:
  std::mt19937_64 gen_;
};

Graph fam(FamilyKind kind, std::vector<int> args) {
  return generate(FamilySpec{kind, std::move(args)});
}

Graph path(int n) { return fam(FamilyKind::path, {n}); }
Graph grid(int m, int n) { return fam(FamilyKind::grid, {m, n}); }

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph random_connected_graph(Rng& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.coin()) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  return path(n);
}

Graph random_tree(Rng& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(rng.uniform(0, v - 1), v);
  return Graph(n, edges);
}

Graph random_bipartite_connected(Rng& rng, int n) {
  if (n == 2) return path(2);
  for (int attempt = 0; attempt < 200; ++attempt) {
    int a = rng.uniform(1, n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
      for (int v = a; v < n; ++v)
        if (rng.coin()) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  return complete_bipartite(1, n - 1);
}

std::vector<int> random_strengths(Rng& rng, const Graph& g, const DistanceMatrix& d) {
  std::vector<int> s(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    int pick = rng.uniform(0, d.strength_cap(v));
    s[v] = rng.coin() ? 0 : pick;
  }
  return s;
}

Broadcast repair_bn(std::vector<int> s, const DistanceMatrix& d) {
  std::vector<int> kept;
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    if (s[v] == 0) continue;
    bool ok = true;
    for (int u : kept)
      if (d.dist(u, v) < s[u] + s[v]) {
        ok = false;
        break;
      }
    if (ok)
      kept.push_back(v);
    else
      s[v] = 0;
  }
  return Broadcast(std::move(s));
}

Broadcast repair_h(std::vector<int> s, const DistanceMatrix& d) {
  std::vector<int> kept;
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    if (s[v] == 0) continue;
    bool ok = true;
    for (int u : kept)
      if (d.dist(u, v) <= std::max(s[u], s[v])) {
        ok = false;
        break;
      }
    if (ok)
      kept.push_back(v);
    else
      s[v] = 0;
  }
  return Broadcast(std::move(s));
}

struct Checks {
  int total = 0;
  std::vector<std::string> failures;
  bool budget_hit = false;
  bool certificate_level = false;

  void require(bool ok, const std::string& what) {
    ++total;
    if (!ok) failures.push_back(what);
  }

  std::string summary() const {
    if (failures.empty()) return "ok (" + std::to_string(total) + " checks)";
    std::string s = failures[0];
    for (std::size_t i = 1; i < failures.size() && i < 3; ++i) s += "; " + failures[i];
    if (failures.size() > 3) s += "; +" + std::to_string(failures.size() - 3) + " more";
    return s;
  }
};

ReportRow run_row(const std::string& id, const std::string& instance,
                  const std::string& expected,
                  const std::function<void(Checks&)>& body) {
  ReportRow row;
  row.claim_id = id;
  row.instance = instance;
  row.expected = expected;
  auto t0 = Clock::now();
  Checks c;
  try {
    body(c);
    row.computed = c.summary();
    if (!c.failures.empty())
      row.status = RowStatus::fail;
    else if (c.certificate_level)
      row.status = RowStatus::certificate_only;
    else if (c.budget_hit)
      row.status = RowStatus::skipped_budget;
    else
      row.status = RowStatus::pass;
  } catch (const std::exception& ex) {
    row.computed = std::string("error: ") + ex.what();
    row.status = RowStatus::fail;
  }
  row.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return row;
}

SolveOptions base_solve_options(const HarnessOptions& o) {
  SolveOptions s;
  s.node_budget = o.node_budget;
  s.threads = o.threads;
  return s;
}

std::optional<int> exact_value(Checks& c, const Graph& g, ParameterKind k,
                               const SolveOptions& so) {
  ParameterResult r = solve(g, k, so);
  if (!r.optimal) {
    c.budget_hit = true;
    return std::nullopt;
  }
  return r.value;
}

void require_value(Checks& c, const Graph& g, ParameterKind k, int expected,
                   const SolveOptions& so, const std::string& what) {
  auto v = exact_value(c, g, k, so);
  if (v)
    c.require(*v == expected, what + ": expected " + std::to_string(expected) +
                                  " got " + std::to_string(*v));
}

// Solves all nine parameters and evaluates every order relation between
// them, plus the diameter and n - delta brackets.
void chain_checks(Checks& c, const Graph& g, const std::string& tag,
                  const SolveOptions& so) {
  if (g.n() > so.max_vertices_maximize) {
    c.budget_hit = true;
    return;
  }
  std::vector<int> val(all_parameter_kinds().size(), 0);
  for (ParameterKind k : all_parameter_kinds()) {
    auto v = exact_value(c, g, k, so);
    if (!v) return;
    val[static_cast<int>(k)] = *v;
  }
  auto at = [&](ParameterKind k) { return val[static_cast<int>(k)]; };
  auto rel = [&](bool ok, const char* text) {
    c.require(ok, tag + ": " + text);
  };
  int gb = at(ParameterKind::gamma_b), Gb = at(ParameterKind::Gamma_b);
  int a = at(ParameterKind::alpha), ah = at(ParameterKind::alpha_h);
  int abn = at(ParameterKind::alpha_bn), abnr = at(ParameterKind::alpha_bnr);
  int abnd = at(ParameterKind::alpha_bnd), ibn = at(ParameterKind::i_bn);
  int ahd = at(ParameterKind::alpha_hd);
  rel(gb <= ibn && ibn <= abn, "gamma_b <= i_bn <= alpha_bn");
  rel(a <= abnd && abnd <= abnr && abnr <= abn && abn <= ah,
      "alpha <= alpha_bnd <= alpha_bnr <= alpha_bn <= alpha_h");
  rel(abnd <= ahd && ahd <= ah, "alpha_bnd <= alpha_hd <= alpha_h");
  rel(ahd <= Gb, "alpha_hd <= Gamma_b");
  rel(abnd <= Gb, "alpha_bnd <= Gamma_b");
  rel(gb <= Gb, "gamma_b <= Gamma_b");
  if (g.n() >= 2) {
    DistanceMatrix d(g);
    rel(abn >= d.diameter() && Gb >= d.diameter(),
        "diameter lower bounds alpha_bn and Gamma_b");
    rel(abn <= g.n() - 1, "alpha_bn <= n-1");
    rel(Gb <= g.n() - d.min_degree(), "Gamma_b <= n-delta");
  }
}

// ---- reproduction rows -------------------------------------------------

ReportRow row_paths(const HarnessOptions& o) {
  return run_row("c01_paths", "P_n for n=2..8",
                 "alpha_bnd = alpha_bn = alpha_bnr = Gamma_b = n-1", [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   for (int n = 2; n <= 8; ++n) {
                     Graph g = path(n);
                     for (ParameterKind k :
                          {ParameterKind::alpha_bnd, ParameterKind::alpha_bn,
                           ParameterKind::alpha_bnr, ParameterKind::Gamma_b})
                       require_value(c, g, k, n - 1, so,
                                     "P_" + std::to_string(n) + " " + parameter_name(k));
                   }
                 });
}

ReportRow row_spiders(const HarnessOptions& o) {
  return run_row(
      "c02_spiders", "Sp(2,2,2), Sp(2,2,2,2), Sp(3,3,3)",
      "(alpha_bn, alpha_bnr, alpha_bnd, Gamma_b, alpha_h) = (6,4,4,4,9), (8,5,5,5,12), "
      "(9,7,7,-,15)",
      [&](Checks& c) {
        SolveOptions so = base_solve_options(o);
        struct Case {
          std::vector<int> legs;
          int bn, bnr, bnd, gb, h;  // gb < 0 means skipped
        };
        for (const Case& cs : {Case{{2, 2, 2}, 6, 4, 4, 4, 9},
                               Case{{2, 2, 2, 2}, 8, 5, 5, 5, 12},
                               Case{{3, 3, 3}, 9, 7, 7, -1, 15}}) {
          Graph g = fam(FamilyKind::spider, cs.legs);
          std::string tag = "Sp(" + std::to_string(cs.legs[0]) + "^" +
                            std::to_string(cs.legs.size()) + ")";
          require_value(c, g, ParameterKind::alpha_bn, cs.bn, so, tag + " alpha_bn");
          require_value(c, g, ParameterKind::alpha_bnr, cs.bnr, so, tag + " alpha_bnr");
          require_value(c, g, ParameterKind::alpha_bnd, cs.bnd, so, tag + " alpha_bnd");
          if (cs.gb >= 0)
            require_value(c, g, ParameterKind::Gamma_b, cs.gb, so, tag + " Gamma_b");
          require_value(c, g, ParameterKind::alpha_h, cs.h, so, tag + " alpha_h");
        }
      });
}

ReportRow row_grids(const HarnessOptions& o) {
  return run_row("c03_grids", "grids up to 3x4",
                 "Gamma_b(G_{m,n}) = m(n-1); alpha = alpha_bn = alpha_bnr = 5 on G_{3,3}",
                 [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   struct Case {
                     int m, n, gb;
                   };
                   for (const Case& cs :
                        {Case{2, 2, 2}, Case{2, 3, 4}, Case{3, 3, 6}, Case{3, 4, 9}}) {
                     Graph g = grid(cs.m, cs.n);
                     require_value(c, g, ParameterKind::Gamma_b, cs.gb, so,
                                   "G_{" + std::to_string(cs.m) + "," +
                                       std::to_string(cs.n) + "} Gamma_b");
                   }
                   Graph g33 = grid(3, 3);
                   ParameterResult mis = independence_number(g33);
                   c.require(mis.value == 5, "G_{3,3} independence number: expected 5 got " +
                                                 std::to_string(mis.value));
                   require_value(c, g33, ParameterKind::alpha, 5, so, "G_{3,3} alpha");
                   require_value(c, g33, ParameterKind::alpha_bn, 5, so, "G_{3,3} alpha_bn");
                   require_value(c, g33, ParameterKind::alpha_bnr, 5, so,
                                 "G_{3,3} alpha_bnr");
                 });
}

ReportRow row_noncomparability(const HarnessOptions& o) {
  return run_row("c04_noncomparability_G2", "G_2 (16 vertices)",
                 "alpha_bnr = 9 > Gamma_b = 7", [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   Graph g = fam(FamilyKind::layered_Gk, {2});
                   ParameterResult rb = solve(g, ParameterKind::alpha_bnr, so);
                   ParameterResult rg = solve(g, ParameterKind::Gamma_b, so);
                   if (rb.optimal && rg.optimal) {
                     c.require(rb.value == 9, "G_2 alpha_bnr: expected 9 got " +
                                                  std::to_string(rb.value));
                     c.require(rg.value == 7, "G_2 Gamma_b: expected 7 got " +
                                                  std::to_string(rg.value));
                     c.require(rb.value > rg.value, "alpha_bnr > Gamma_b");
                     return;
                   }
                   // Budget ran out: fall back to the witnesses, upper-bound
                   // checks stay open.
                   Certificate lower_bnr =
                       build_certificate("Gk_bnr_f", FamilySpec{FamilyKind::layered_Gk, {2}});
                   Certificate lower_gb = build_certificate(
                       "Gk_dom_set", FamilySpec{FamilyKind::layered_Gk, {2}});
                   c.require(lower_bnr.broadcast.weight() == 9, "Gk_bnr_f weight 9");
                   c.require(lower_gb.broadcast.weight() == 7, "Gk_dom_set weight 7");
                   c.certificate_level = true;
                 });
}

ReportRow row_G1(const HarnessOptions& o) {
  return run_row("c05_G1_exact_Gamma", "G_1 (11 vertices), G_k certificates k=1..4",
                 "Gamma_b(G_1) = 5; Gk_bnr_f weight 3(k+1) validates", [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   Graph g1 = fam(FamilyKind::layered_Gk, {1});
                   require_value(c, g1, ParameterKind::Gamma_b, 5, so, "G_1 Gamma_b");
                   for (int k = 1; k <= 4; ++k) {
                     Certificate cert = build_certificate(
                         "Gk_bnr_f", FamilySpec{FamilyKind::layered_Gk, {k}});
                     c.require(cert.broadcast.weight() == 3 * (k + 1),
                               "Gk_bnr_f weight, k=" + std::to_string(k));
                   }
                 });
}

ReportRow row_Tk(const HarnessOptions& o) {
  return run_row("c06_Tk_family", "T_2 exact; T_k certificates k=2..5",
                 "alpha_bnr(T_2) = 6; Tk_gamma_f weight 4k minimal dominating",
                 [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   Graph t2 = fam(FamilyKind::chain_tree_Tk, {2});
                   require_value(c, t2, ParameterKind::alpha_bnr, 6, so, "T_2 alpha_bnr");
                   for (int k = 2; k <= 5; ++k) {
                     Certificate cert = build_certificate(
                         "Tk_gamma_f", FamilySpec{FamilyKind::chain_tree_Tk, {k}});
                     c.require(cert.broadcast.weight() == 4 * k,
                               "Tk_gamma_f weight, k=" + std::to_string(k));
                   }
                 });
}

ReportRow row_anchor_tree(const HarnessOptions& o) {
  return run_row("c07_anchor_tree_exact", "anchor tree T (21 vertices)",
                 "Gamma_b = 13 and alpha_bnr = 14", [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   so.node_budget = o.anchor_node_budget;
                   so.time_budget_seconds = o.anchor_time_seconds;
                   Graph t = fam(FamilyKind::anchor_tree_T, {});
                   ParameterResult rg = solve(t, ParameterKind::Gamma_b, so);
                   ParameterResult rb = solve(t, ParameterKind::alpha_bnr, so);
                   if (rg.optimal && rb.optimal) {
                     c.require(rg.value == 13, "T Gamma_b: expected 13 got " +
                                                   std::to_string(rg.value));
                     c.require(rb.value == 14, "T alpha_bnr: expected 14 got " +
                                                   std::to_string(rb.value));
                     return;
                   }
                   Certificate g13 = build_certificate(
                       "T_gamma_g13", FamilySpec{FamilyKind::anchor_tree_T, {}});
                   Certificate f14 = build_certificate(
                       "T_bnr_f14", FamilySpec{FamilyKind::anchor_tree_T, {}});
                   c.require(g13.broadcast.weight() == 13, "T_gamma_g13 weight 13");
                   c.require(f14.broadcast.weight() == 14, "T_bnr_f14 weight 14");
                   c.certificate_level = true;
                 });
}

ReportRow row_H1(const HarnessOptions&) {
  return run_row("c08_H1_certificates", "H_1 (63 vertices)",
                 "lambda weight 41 minimal dominating; union weight 42 bn-independent "
                 "irredundant not dominating; gap >= 1",
                 [&](Checks& c) {
                   Certificate lambda = build_certificate(
                       "Hk_lambda", FamilySpec{FamilyKind::linked_trees_Hk, {1}});
                   Certificate uni = build_certificate(
                       "Hk_bnr_union", FamilySpec{FamilyKind::linked_trees_Hk, {1}});
                   c.require(lambda.broadcast.weight() == 41, "Hk_lambda weight 41");
                   c.require(uni.broadcast.weight() == 42, "Hk_bnr_union weight 42");
                   c.require(uni.broadcast.weight() - lambda.broadcast.weight() >= 1,
                             "witnessed gap >= 1");
                   c.certificate_level = true;
                 });
}

ReportRow row_KnP3(const HarnessOptions& o) {
  return run_row("c09_KnP3", "K_n x P_3 for n=2,3,4",
                 "Gamma_b = 2n; alpha_bn = alpha_bnr = 3", [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   for (int n = 2; n <= 4; ++n) {
                     Graph g = fam(FamilyKind::complete_times_P3, {n});
                     std::string tag = "K_" + std::to_string(n) + "xP_3";
                     require_value(c, g, ParameterKind::Gamma_b, 2 * n, so,
                                   tag + " Gamma_b");
                     require_value(c, g, ParameterKind::alpha_bn, 3, so, tag + " alpha_bn");
                     require_value(c, g, ParameterKind::alpha_bnr, 3, so,
                                   tag + " alpha_bnr");
                   }
                 });
}

ReportRow row_open_question(const HarnessOptions& o) {
  return run_row("c10_open_question", "6-vertex two-triple example",
                 "alpha_hd >= 4 certified and exact; alpha_bnd = alpha = diam = 3",
                 [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   FamilySpec spec{FamilyKind::open_question_example, {}};
                   Certificate cert = build_certificate("open_question_hd", spec);
                   c.require(cert.broadcast.weight() == 4, "certificate weight 4");
                   Graph g = cert.graph;
                   auto hd = exact_value(c, g, ParameterKind::alpha_hd, so);
                   if (hd) c.require(*hd >= 4, "alpha_hd >= 4, got " + std::to_string(*hd));
                   require_value(c, g, ParameterKind::alpha_bnd, 3, so, "alpha_bnd");
                   ParameterResult mis = independence_number(g);
                   c.require(mis.value == 3, "alpha: expected 3 got " +
                                                 std::to_string(mis.value));
                   DistanceMatrix d(g);
                   c.require(d.diameter() == 3, "diameter 3");
                 });
}

ReportRow row_property_suite(const HarnessOptions& o) {
  ReportRow row;
  row.claim_id = "c11_property_suite";
  row.instance = "seeded randomized suites, seed " + std::to_string(o.seed) + ", " +
                 std::to_string(o.trials) + " trials";
  row.expected = "all property rows pass";
  auto t0 = Clock::now();
  std::vector<ReportRow> rows = property_suite(o);
  int fails = 0;
  for (const ReportRow& r : rows)
    if (r.status == RowStatus::fail) ++fails;
  row.computed = std::to_string(rows.size()) + " rows, " + std::to_string(fails) +
                 " failed";
  if (fails > 0)
    for (const ReportRow& r : rows)
      if (r.status == RowStatus::fail) {
        row.computed += "; " + r.claim_id + ": " + r.computed;
        break;
      }
  row.status = fails == 0 ? RowStatus::pass : RowStatus::fail;
  row.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return row;
}

ReportRow row_difference(const HarnessOptions& o) {
  return run_row("c12_difference_scaling", "G_{3,4}",
                 "Gamma_b - alpha_bn = 9 - 6 = 3 >= floor(4/2)", [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   Graph g = grid(3, 4);
                   auto gb = exact_value(c, g, ParameterKind::Gamma_b, so);
                   auto bn = exact_value(c, g, ParameterKind::alpha_bn, so);
                   if (gb && bn) {
                     c.require(*gb == 9, "Gamma_b: expected 9 got " + std::to_string(*gb));
                     c.require(*bn == 6, "alpha_bn: expected 6 got " + std::to_string(*bn));
                     c.require(*gb - *bn >= 2, "difference >= floor(k/2)");
                   }
                 });
}

// ---- property rows -----------------------------------------------------

Graph sample_connected(Rng& rng, int lo, int hi) {
  int n = rng.uniform(lo, hi);
  return rng.coin() ? random_connected_graph(rng, n) : random_tree(rng, n);
}

ReportRow prop_bn_equivalence(const HarnessOptions& o) {
  return run_row("p01_bn_equivalence", "random graphs and trees, n <= 8",
                 "definitional bn-independence agrees with the pairwise criterion "
                 "and the reference oracle",
                 [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 1);
                   for (int t = 0; t < o.trials; ++t) {
                     Graph g = sample_connected(rng, 2, 8);
                     DistanceMatrix d(g);
                     Broadcast f(random_strengths(rng, g, d));
                     bool a = is_bn_independent(f, g, d);
                     bool b = bn_pairwise_criterion(f, g, d);
                     auto fw = oracle::floyd_warshall(g);
                     bool orc = oracle::bn_independent(f.strengths(), fw);
                     c.require(a == b && b == orc,
                               "disagreement on trial " + std::to_string(t));
                   }
                 });
}

ReportRow prop_minimality_oracle(const HarnessOptions& o) {
  return run_row("p02_minimality_oracle", "random dominating broadcasts, n <= 7",
                 "single-decrement minimality test agrees with full downward search",
                 [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 2);
                   for (int t = 0; t < o.trials; ++t) {
                     Graph g = sample_connected(rng, 2, 7);
                     DistanceMatrix d(g);
                     Broadcast f;
                     bool found = false;
                     for (int tries = 0; tries < 60 && !found; ++tries) {
                       Broadcast cand(random_strengths(rng, g, d));
                       if (is_dominating(cand, g, d)) {
                         f = cand;
                         found = true;
                       }
                     }
                     if (!found) {
                       std::vector<int> s(g.n(), 0);
                       s[0] = d.eccentricity(0);
                       if (s[0] == 0) s[0] = 1;
                       f = Broadcast(s);
                     }
                     long long vectors = 1;
                     for (int v : f.broadcasters()) vectors *= f.strength(v) + 1;
                     if (vectors > 200000) continue;  // keep the odometer cheap
                     bool fast = is_minimal_dominating(f, g, d);
                     bool dec = is_minimal_dominating_oracle(f, g, d);
                     auto fw = oracle::floyd_warshall(g);
                     bool full = oracle::minimal_dominating_full(f.strengths(), fw);
                     c.require(fast == dec && dec == full,
                               "disagreement on trial " + std::to_string(t));
                   }
                 });
}

ReportRow prop_maximality(const HarnessOptions& o) {
  return run_row("p03_maximality_characterizations",
                 "random bn-independent broadcasts, n <= 8",
                 "increment test agrees with both structural characterizations "
                 "and the oracle",
                 [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 3);
                   for (int t = 0; t < o.trials; ++t) {
                     Graph g = sample_connected(rng, 2, 8);
                     DistanceMatrix d(g);
                     Broadcast f = repair_bn(random_strengths(rng, g, d), d);
                     bool inc = is_maximal_bn_independent(f, g, d);
                     bool ch1 = maximal_bn_characterization_i(f, g, d);
                     c.require(inc == ch1,
                               "characterization (i) trial " + std::to_string(t));
                     if (f.broadcasters().size() >= 2) {
                       bool ch2 = maximal_bn_characterization_ii(f, g, d);
                       c.require(inc == ch2,
                                 "characterization (ii) trial " + std::to_string(t));
                     }
                     auto fw = oracle::floyd_warshall(g);
                     bool orc = oracle::maximal_bn_independent(f.strengths(), fw);
                     c.require(inc == orc, "oracle trial " + std::to_string(t));
                   }
                 });
}

ReportRow prop_solver_vs_oracle(const HarnessOptions& o) {
  return run_row("p04_solver_vs_oracle", "random graphs and trees, n <= 7",
                 "solver value and lexicographic witness match full enumeration "
                 "for all nine parameters",
                 [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 4);
                   SolveOptions so = base_solve_options(o);
                   int trials = std::max(10, o.trials / 5);
                   for (int t = 0; t < trials; ++t) {
                     Graph g = sample_connected(rng, 2, 7);
                     auto optima = oracle::exhaustive_optima(g);
                     for (ParameterKind k : all_parameter_kinds()) {
                       const auto& opt = optima[static_cast<int>(k)];
                       c.require(opt.feasible_exists,
                                 parameter_name(k) + " infeasible on trial " +
                                     std::to_string(t));
                       if (!opt.feasible_exists) continue;
                       ParameterResult r = solve(g, k, so);
                       if (!r.optimal) {
                         c.budget_hit = true;
                         continue;
                       }
                       c.require(r.value == opt.value,
                                 parameter_name(k) + " value trial " + std::to_string(t) +
                                     ": solver " + std::to_string(r.value) + " oracle " +
                                     std::to_string(opt.value));
                       c.require(r.witness.strengths() == opt.lex_least_witness,
                                 parameter_name(k) + " witness trial " +
                                     std::to_string(t));
                     }
                   }
                 });
}

ReportRow prop_inequality_chain(const HarnessOptions& o) {
  return run_row("p05_inequality_chain", "random instances n <= 7 plus Sp(2,2,2)",
                 "alpha <= alpha_bnd <= alpha_bnr <= alpha_bn <= alpha_h; "
                 "independence number consistent",
                 [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 5);
                   SolveOptions so = base_solve_options(o);
                   int trials = std::max(10, o.trials / 4);
                   for (int t = 0; t < trials; ++t) {
                     Graph g = sample_connected(rng, 2, 7);
                     auto a = exact_value(c, g, ParameterKind::alpha, so);
                     auto bnd = exact_value(c, g, ParameterKind::alpha_bnd, so);
                     auto bnr = exact_value(c, g, ParameterKind::alpha_bnr, so);
                     auto bn = exact_value(c, g, ParameterKind::alpha_bn, so);
                     auto h = exact_value(c, g, ParameterKind::alpha_h, so);
                     if (!(a && bnd && bnr && bn && h)) continue;
                     c.require(*a <= *bnd && *bnd <= *bnr && *bnr <= *bn && *bn <= *h,
                               "chain violated on trial " + std::to_string(t));
                     ParameterResult mis = independence_number(g);
                     c.require(mis.value == *a,
                               "independence mismatch on trial " + std::to_string(t));
                     DistanceMatrix d(g);
                     if (g.n() >= 2)
                       c.require(*bn >= d.diameter() && *bn <= g.n() - 1,
                                 "alpha_bn bracket on trial " + std::to_string(t));
                   }
                   Graph sp = fam(FamilyKind::spider, {2, 2, 2});
                   require_value(c, sp, ParameterKind::alpha, 4, so, "Sp(2,2,2) alpha");
                   require_value(c, sp, ParameterKind::alpha_bnd, 4, so,
                                 "Sp(2,2,2) alpha_bnd");
                   require_value(c, sp, ParameterKind::alpha_bnr, 4, so,
                                 "Sp(2,2,2) alpha_bnr");
                   require_value(c, sp, ParameterKind::alpha_bn, 6, so,
                                 "Sp(2,2,2) alpha_bn");
                   require_value(c, sp, ParameterKind::alpha_h, 9, so,
                                 "Sp(2,2,2) alpha_h");
                 });
}

ReportRow prop_order_relations(const HarnessOptions& o) {
  return run_row("p06_order_relations", "random instances n <= 7 plus K_4",
                 "all nine parameters respect every order relation", [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 6);
                   SolveOptions so = base_solve_options(o);
                   int trials = std::max(5, o.trials / 8);
                   for (int t = 0; t < trials; ++t) {
                     Graph g = sample_connected(rng, 2, 7);
                     chain_checks(c, g, "trial " + std::to_string(t), so);
                   }
                   Graph k4 = fam(FamilyKind::complete, {4});
                   chain_checks(c, k4, "K_4", so);
                   require_value(c, k4, ParameterKind::alpha_bn, 1, so, "K_4 alpha_bn");
                   require_value(c, k4, ParameterKind::Gamma_b, 1, so, "K_4 Gamma_b");
                 });
}

ReportRow prop_bipartite_equality(const HarnessOptions& o) {
  return run_row("p07_bipartite_equality",
                 "C_4, C_6, C_8, grids to 3x4, K_{2,3}",
                 "on 2-connected bipartite graphs alpha = alpha_bnd = alpha_bnr = alpha_bn",
                 [&](Checks& c) {
                   SolveOptions so = base_solve_options(o);
                   std::vector<std::pair<std::string, Graph>> fixed;
                   fixed.emplace_back("C_4", fam(FamilyKind::cycle, {4}));
                   fixed.emplace_back("C_6", fam(FamilyKind::cycle, {6}));
                   fixed.emplace_back("C_8", fam(FamilyKind::cycle, {8}));
                   fixed.emplace_back("G_{2,2}", grid(2, 2));
                   fixed.emplace_back("G_{2,3}", grid(2, 3));
                   fixed.emplace_back("G_{3,3}", grid(3, 3));
                   fixed.emplace_back("G_{3,4}", grid(3, 4));
                   fixed.emplace_back("K_{2,3}", complete_bipartite(2, 3));
                   for (auto& [name, g] : fixed) {
                     c.require(is_two_connected(g) && is_bipartite(g),
                               name + " is 2-connected bipartite");
                     auto a = exact_value(c, g, ParameterKind::alpha, so);
                     auto bnd = exact_value(c, g, ParameterKind::alpha_bnd, so);
                     auto bnr = exact_value(c, g, ParameterKind::alpha_bnr, so);
                     auto bn = exact_value(c, g, ParameterKind::alpha_bn, so);
                     if (a && bnd && bnr && bn)
                       c.require(*a == *bnd && *bnd == *bnr && *bnr == *bn,
                                 name + " equality chain");
                   }
                 });
}

ReportRow prop_spanning_tree(const HarnessOptions& o) {
  return run_row("p08_spanning_tree_monotone", "random connected graphs, n <= 9",
                 "alpha_bn does not drop on a spanning tree", [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 8);
                   SolveOptions so = base_solve_options(o);
                   int trials = std::max(10, o.trials / 4);
                   for (int t = 0; t < trials; ++t) {
                     int n = rng.uniform(2, 9);
                     Graph g = random_connected_graph(rng, n);
                     Graph tree = spanning_tree(g);
                     auto vg = exact_value(c, g, ParameterKind::alpha_bn, so);
                     auto vt = exact_value(c, tree, ParameterKind::alpha_bn, so);
                     if (vg && vt)
                       c.require(*vt >= *vg, "monotonicity on trial " + std::to_string(t));
                   }
                 });
}

ReportRow prop_ratio(const HarnessOptions& o) {
  return run_row("p09_ratio_bn_vs_Gamma", "random instances n <= 7",
                 "alpha_bn < 2 Gamma_b", [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 9);
                   SolveOptions so = base_solve_options(o);
                   int trials = std::max(10, o.trials / 4);
                   for (int t = 0; t < trials; ++t) {
                     Graph g = sample_connected(rng, 2, 7);
                     auto bn = exact_value(c, g, ParameterKind::alpha_bn, so);
                     auto gb = exact_value(c, g, ParameterKind::Gamma_b, so);
                     if (bn && gb)
                       c.require(*bn < 2 * *gb, "ratio on trial " + std::to_string(t));
                   }
                 });
}

ReportRow prop_bipartite_ratio(const HarnessOptions& o) {
  return run_row("p10_bipartite_ratio", "random bipartite instances, n <= 7",
                 "Gamma_b < 2 alpha_bnr on connected bipartite graphs", [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 10);
                   SolveOptions so = base_solve_options(o);
                   int trials = std::max(10, o.trials / 4);
                   for (int t = 0; t < trials; ++t) {
                     int n = rng.uniform(2, 7);
                     Graph g = rng.coin() ? random_bipartite_connected(rng, n)
                                          : random_tree(rng, n);
                     c.require(is_bipartite(g), "sampler produced non-bipartite graph");
                     auto gb = exact_value(c, g, ParameterKind::Gamma_b, so);
                     auto bnr = exact_value(c, g, ParameterKind::alpha_bnr, so);
                     if (gb && bnr)
                       c.require(*gb < 2 * *bnr, "ratio on trial " + std::to_string(t));
                   }
                 });
}

ReportRow prop_reductions(const HarnessOptions& o) {
  return run_row(
      "p11_reductions", "solver alpha_bn witnesses, n <= 7; fixed spider and P_4",
      "irredundant_reduction lands above half the weight; decrement preconditions hold",
      [&](Checks& c) {
        Rng rng(o.seed * 1000003 + 11);
        SolveOptions so = base_solve_options(o);
        int trials = std::max(10, o.trials / 4);
        for (int t = 0; t < trials; ++t) {
          Graph g = sample_connected(rng, 2, 7);
          ParameterResult r = solve(g, ParameterKind::alpha_bn, so);
          if (!r.optimal) {
            c.budget_hit = true;
            continue;
          }
          Broadcast f = r.witness;
          ReductionTrace trace = irredundant_reduction(f, g);
          int sigma_f = f.weight();
          int sigma_r = trace.result.weight();
          c.require(sigma_r == sigma_f - static_cast<int>(trace.steps.size()),
                    "weight bookkeeping on trial " + std::to_string(t));
          c.require(2 * sigma_r > sigma_f,
                    "half-weight bound on trial " + std::to_string(t));
          if (f.strength_one().empty() && !f.broadcasters().empty())
            c.require(static_cast<int>(trace.steps.size()) <
                          static_cast<int>(f.strength_two_plus().size()),
                      "step count bound on trial " + std::to_string(t));
          auto gb = exact_value(c, g, ParameterKind::Gamma_b, so);
          if (gb)
            c.require(*gb >= sigma_r,
                      "Gamma_b dominates reduced weight on trial " + std::to_string(t));
        }
        // Frozen small cases.
        Graph sp = fam(FamilyKind::spider, {2, 2, 2});
        DistanceMatrix dsp(sp);
        std::vector<int> s(sp.n(), 0);
        for (int i = 1; i <= 3; ++i) s[sp.vertex("l_" + std::to_string(i))] = 2;
        Broadcast full(s);
        ReductionTrace trace = irredundant_reduction(full, sp);
        c.require(trace.steps.size() == 2, "Sp(2,2,2) reduction takes two steps");
        c.require(trace.result.weight() == 4, "Sp(2,2,2) reduction lands at weight 4");
        if (trace.steps.size() == 2) {
          c.require(trace.steps[0].vertex == sp.vertex("l_1") &&
                        trace.steps[1].vertex == sp.vertex("l_2"),
                    "Sp(2,2,2) reduction order l_1 then l_2");
        }
        Broadcast dec = decrement_reduction(full, sp.vertex("l_1"), sp);
        c.require(dec.strength(sp.vertex("l_1")) == 1, "decrement lowers l_1 to 1");
        Graph p4 = path(4);
        std::vector<int> sp4(4, 0);
        sp4[0] = 3;
        bool threw = false;
        try {
          decrement_reduction(Broadcast(sp4), 0, p4);
        } catch (const std::invalid_argument&) {
          threw = true;
        }
        c.require(threw, "P_4 decrement precondition rejected");
      });
}

ReportRow prop_tree_structure(const HarnessOptions& o) {
  return run_row(
      "p12_tree_structure", "random trees n <= 10 plus paths",
      "optimal tree broadcasts: leaves hear only leaves; leaf-or-one optima exist; "
      "heuristic is value-preserving",
      [&](Checks& c) {
        Rng rng(o.seed * 1000003 + 12);
        SolveOptions so = base_solve_options(o);
        int trials = std::max(5, o.trials / 10);
        std::vector<Graph> instances;
        for (int n = 2; n <= 7; ++n) instances.push_back(path(n));
        for (int t = 0; t < trials; ++t)
          instances.push_back(random_tree(rng, rng.uniform(2, 10)));
        constexpr int kLimit = 50000;
        int idx = 0;
        for (const Graph& g : instances) {
          std::string tag = "instance " + std::to_string(idx++);
          DistanceMatrix d(g);
          std::vector<bool> leaf(g.n());
          for (int v = 0; v < g.n(); ++v) leaf[v] = g.degree(v) == 1;

          std::vector<Broadcast> bn_opt =
              enumerate_optimal(g, ParameterKind::alpha_bn, kLimit, so);
          c.require(!bn_opt.empty() &&
                        static_cast<int>(bn_opt.size()) < kLimit,
                    tag + ": alpha_bn enumeration complete");
          bool exists_leaf_or_one = false;
          int max_ones = -1;
          for (const Broadcast& f : bn_opt)
            max_ones = std::max(max_ones, static_cast<int>(f.strength_one().size()));
          for (const Broadcast& f : bn_opt) {
            for (int v : f.broadcasters()) {
              if (leaf[v] || g.n() == 1) continue;
              for (int u = 0; u < g.n(); ++u)
                if (leaf[u] && d.dist(u, v) <= f.strength(v))
                  c.require(false, tag + ": leaf hears a non-leaf");
            }
            bool ok = true;
            for (int v : f.broadcasters())
              if (f.strength(v) != 1 && !leaf[v]) ok = false;
            exists_leaf_or_one = exists_leaf_or_one || ok;
            if (static_cast<int>(f.strength_one().size()) == max_ones) {
              BroadcastAnalysis a = analyze(f, g, d);
              for (int v : f.strength_two_plus())
                c.require(a.sets_for(v).private_boundary.empty(),
                          tag + ": max-|V1| optimum keeps a private boundary on V++");
            }
          }
          c.require(exists_leaf_or_one, tag + ": alpha_bn leaf-or-one optimum exists");

          std::vector<Broadcast> bnr_opt =
              enumerate_optimal(g, ParameterKind::alpha_bnr, kLimit, so);
          c.require(!bnr_opt.empty() &&
                        static_cast<int>(bnr_opt.size()) < kLimit,
                    tag + ": alpha_bnr enumeration complete");
          bool bnr_leaf_or_one = false;
          bool bnr_leaf_hearing = false;
          for (const Broadcast& f : bnr_opt) {
            bool ok = true;
            bool hearing_ok = true;
            for (int v : f.broadcasters()) {
              if (f.strength(v) != 1 && !leaf[v]) ok = false;
              if (!leaf[v])
                for (int u = 0; u < g.n(); ++u)
                  if (leaf[u] && d.dist(u, v) <= f.strength(v)) hearing_ok = false;
            }
            bnr_leaf_or_one = bnr_leaf_or_one || ok;
            bnr_leaf_hearing = bnr_leaf_hearing || hearing_ok;
          }
          c.require(bnr_leaf_or_one, tag + ": alpha_bnr leaf-or-one optimum exists");
          c.require(bnr_leaf_hearing,
                    tag + ": alpha_bnr optimum with leaves hearing only leaves exists");

          SolveOptions plain = so;
          plain.enable_tree_heuristics = false;
          for (ParameterKind k : {ParameterKind::alpha_bn, ParameterKind::alpha_bnr}) {
            ParameterResult with = solve(g, k, so);
            ParameterResult without = solve(g, k, plain);
            c.require(with.optimal && without.optimal &&
                          with.value == without.value &&
                          with.witness == without.witness,
                      tag + ": heuristic changes " + parameter_name(k));
          }
        }
      });
}

ReportRow prop_analysis_invariants(const HarnessOptions& o) {
  return run_row("p13_analysis_invariants",
                 "random bn- and h-independent broadcasts, n <= 8",
                 "strength-1 broadcasters own themselves; edges covered at most once; "
                 "bn implies hearing independent",
                 [&](Checks& c) {
                   Rng rng(o.seed * 1000003 + 13);
                   for (int t = 0; t < o.trials; ++t) {
                     Graph g = sample_connected(rng, 2, 8);
                     DistanceMatrix d(g);
                     Broadcast f = repair_bn(random_strengths(rng, g, d), d);
                     if (f.weight() == 0) {
                       std::vector<int> s(g.n(), 0);
                       s[rng.uniform(0, g.n() - 1)] = 1;
                       f = Broadcast(s);
                     }
                     BroadcastAnalysis a = analyze(f, g, d);
                     for (int v : f.strength_one()) {
                       const auto& pb = a.sets_for(v).private_boundary;
                       c.require(std::find(pb.begin(), pb.end(), v) != pb.end(),
                                 "own-private on trial " + std::to_string(t));
                     }
                     for (const auto& covers : a.covered_by())
                       c.require(covers.size() <= 1,
                                 "edge covered twice on trial " + std::to_string(t));
                     c.require(is_hearing_independent(f, g, d),
                               "bn not hearing independent on trial " + std::to_string(t));

                     Broadcast h = repair_h(random_strengths(rng, g, d), d);
                     if (h.weight() > 0) {
                       BroadcastAnalysis ah = analyze(h, g, d);
                       for (int v : h.strength_one()) {
                         const auto& pb = ah.sets_for(v).private_boundary;
                         c.require(std::find(pb.begin(), pb.end(), v) != pb.end(),
                                   "h own-private on trial " + std::to_string(t));
                       }
                     }
                   }
                 });
}

ReportRow prop_determinism(const HarnessOptions& o) {
  return run_row("p14_determinism", "fixed instances, 1 vs 2 worker threads",
                 "value, witness, and optimality independent of worker count",
                 [&](Checks& c) {
                   std::vector<std::pair<std::string, Graph>> fixed;
                   fixed.emplace_back("Sp(2,2,2)", fam(FamilyKind::spider, {2, 2, 2}));
                   fixed.emplace_back("G_{3,3}", grid(3, 3));
                   fixed.emplace_back("P_7", path(7));
                   fixed.emplace_back("K_3xP_3", fam(FamilyKind::complete_times_P3, {3}));
                   for (auto& [name, g] : fixed)
                     for (ParameterKind k : {ParameterKind::alpha_bnr,
                                             ParameterKind::Gamma_b,
                                             ParameterKind::i_bn}) {
                       SolveOptions one = base_solve_options(o);
                       one.threads = 1;
                       SolveOptions two = base_solve_options(o);
                       two.threads = 2;
                       ParameterResult r1 = solve(g, k, one);
                       ParameterResult r2 = solve(g, k, two);
                       c.require(r1.optimal == r2.optimal && r1.value == r2.value &&
                                     r1.witness == r2.witness,
                                 name + " " + parameter_name(k) + " differs by thread count");
                     }
                 });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string status_name(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::certificate_only: return "certificate_only";
    case RowStatus::skipped_budget: return "skipped_budget";
  }
  return "unknown";
}

std::vector<ReportRow> reproduce_table(const HarnessOptions& opts) {
  std::vector<ReportRow> rows;
  rows.push_back(row_paths(opts));
  rows.push_back(row_spiders(opts));
  rows.push_back(row_grids(opts));
  rows.push_back(row_noncomparability(opts));
  rows.push_back(row_G1(opts));
  rows.push_back(row_Tk(opts));
  rows.push_back(row_anchor_tree(opts));
  rows.push_back(row_H1(opts));
  rows.push_back(row_KnP3(opts));
  rows.push_back(row_open_question(opts));
  rows.push_back(row_property_suite(opts));
  rows.push_back(row_difference(opts));
  return rows;
}

std::vector<ReportRow> property_suite(const HarnessOptions& opts) {
  std::vector<ReportRow> rows;
  rows.push_back(prop_bn_equivalence(opts));
  rows.push_back(prop_minimality_oracle(opts));
  rows.push_back(prop_maximality(opts));
  rows.push_back(prop_solver_vs_oracle(opts));
  rows.push_back(prop_inequality_chain(opts));
  rows.push_back(prop_order_relations(opts));
  rows.push_back(prop_bipartite_equality(opts));
  rows.push_back(prop_spanning_tree(opts));
  rows.push_back(prop_ratio(opts));
  rows.push_back(prop_bipartite_ratio(opts));
  rows.push_back(prop_reductions(opts));
  rows.push_back(prop_tree_structure(opts));
  rows.push_back(prop_analysis_invariants(opts));
  rows.push_back(prop_determinism(opts));
  return rows;
}

ReportRow inequality_chain_check(const Graph& g, const std::string& instance,
                                 const HarnessOptions& opts) {
  return run_row("inequality_chain", instance, "parameter order relations hold",
                 [&](Checks& c) {
                   chain_checks(c, g, instance, base_solve_options(opts));
                 });
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::string out = "claim_id,instance,expected,computed,status,elapsed_ms\n";
  for (const ReportRow& r : rows) {
    out += csv_field(r.claim_id) + ',' + csv_field(r.instance) + ',' +
           csv_field(r.expected) + ',' + csv_field(r.computed) + ',' +
           status_name(r.status) + ',' + std::to_string(r.elapsed_ms) + '\n';
  }
  return out;
}

std::string report_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = r.instance;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["status"] = status_name(r.status);
    j["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

bool all_pass(const std::vector<ReportRow>& rows) {
  for (const ReportRow& r : rows)
    if (r.status == RowStatus::fail) return false;
  return true;
}

}  // namespace blab
