#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "blab/broadcast.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"
#include "blab/oracle.hpp"
#include "blab/solver.hpp"

using namespace blab;

namespace {
Graph fam(FamilyKind k, std::vector<int> args) { return generate(FamilySpec{k, std::move(args)}); }
}  // namespace

TEST_CASE("a priori bounds") {
  auto b = bounds(fam(FamilyKind::path, {5}), ParameterKind::Gamma_b);
  CHECK(b == std::pair<int, int>{4, 4});
  b = bounds(fam(FamilyKind::complete, {5}), ParameterKind::Gamma_b);
  CHECK(b == std::pair<int, int>{1, 1});
  b = bounds(fam(FamilyKind::spider, {2, 2, 2}), ParameterKind::alpha_bn);
  CHECK(b == std::pair<int, int>{4, 6});
  b = bounds(fam(FamilyKind::path, {1}), ParameterKind::alpha_h);
  CHECK(b == std::pair<int, int>{1, 1});
}

TEST_CASE("solver agrees with exhaustive enumeration on fixed instances") {
  for (const Graph& g : {fam(FamilyKind::path, {4}), fam(FamilyKind::cycle, {5}),
                         fam(FamilyKind::complete, {4}),
                         fam(FamilyKind::spider, {2, 2, 2})}) {
    auto optima = oracle::exhaustive_optima(g);
    for (ParameterKind k : all_parameter_kinds()) {
      const auto& opt = optima[static_cast<int>(k)];
      REQUIRE(opt.feasible_exists);
      ParameterResult r = solve(g, k);
      CHECK(r.optimal);
      CHECK(r.value == opt.value);
      CHECK(r.witness.strengths() == opt.lex_least_witness);
      CHECK(r.witness.weight() == r.value);
      CHECK(r.bound_direction() == BoundDirection::exact);
    }
  }
}

TEST_CASE("trivial orders") {
  Graph k1 = fam(FamilyKind::path, {1});
  for (ParameterKind k : all_parameter_kinds()) {
    ParameterResult r = solve(k1, k);
    CHECK(r.optimal);
    CHECK(r.value == 1);
    CHECK(r.witness.strengths() == std::vector<int>{1});
  }
  ParameterResult p2 = solve(fam(FamilyKind::path, {2}), ParameterKind::i_bn);
  CHECK(p2.optimal);
  CHECK(p2.value == 1);
}

TEST_CASE("lexicographic witness enumeration") {
  Graph p3 = fam(FamilyKind::path, {3});
  auto opt = enumerate_optimal(p3, ParameterKind::alpha_bn, 100);
  REQUIRE(opt.size() == 3);
  CHECK(opt[0].strengths() == std::vector<int>{0, 0, 2});
  CHECK(opt[1].strengths() == std::vector<int>{1, 0, 1});
  CHECK(opt[2].strengths() == std::vector<int>{2, 0, 0});

  Graph p4 = fam(FamilyKind::path, {4});
  auto gb = enumerate_optimal(p4, ParameterKind::Gamma_b, 100);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0].strengths() == std::vector<int>{0, 0, 0, 3});
  CHECK(gb[1].strengths() == std::vector<int>{3, 0, 0, 0});

  Graph sp = fam(FamilyKind::spider, {2, 2, 2});
  auto bn = enumerate_optimal(sp, ParameterKind::alpha_bn, 100);
  REQUIRE(bn.size() == 1);  // the all-leaves broadcast is the unique optimum
  CHECK(bn[0].strengths() == std::vector<int>{0, 0, 2, 0, 2, 0, 2});

  CHECK_THROWS_AS(enumerate_optimal(fam(FamilyKind::grid, {4, 4}),
                                    ParameterKind::alpha_bn, 10),
                  std::invalid_argument);
}

TEST_CASE("budget exhaustion degrades to a bound") {
  SolveOptions so;
  so.node_budget = 1;
  Graph g = fam(FamilyKind::grid, {3, 3});
  ParameterResult r = solve(g, ParameterKind::Gamma_b, so);
  CHECK(!r.optimal);
  CHECK(r.bound_direction() == BoundDirection::lower);
  CHECK(r.value >= 4);
  CHECK(r.value <= 6);
  DistanceMatrix d(g);
  CHECK(is_minimal_dominating(r.witness, g, d));  // incumbent stays feasible
}

TEST_CASE("anchor tree broadcast numbers") {
  Graph t = fam(FamilyKind::anchor_tree_T, {});
  ParameterResult bnr = solve(t, ParameterKind::alpha_bnr);
  CHECK(bnr.optimal);
  CHECK(bnr.value == 14);

  // The maximum minimal dominating broadcast puts 5 on one leaf, whose
  // private boundary is the opposite anchor at distance exactly 5.
  ParameterResult g = solve(t, ParameterKind::Gamma_b);
  CHECK(g.optimal);
  CHECK(g.value == 15);
  std::vector<int> expect(t.n(), 0);
  for (const char* leaf : {"l_u_1", "l_u_2", "l_u_3"}) expect[t.vertex(leaf)] = 2;
  expect[t.vertex("l_w_1")] = 5;
  expect[t.vertex("a_w_2")] = 2;
  expect[t.vertex("a_w_3")] = 2;
  CHECK(g.witness.strengths() == expect);
  DistanceMatrix d(t);
  CHECK(is_minimal_dominating_oracle(g.witness, t, d));
  BroadcastAnalysis a = analyze(g.witness, t, d);
  CHECK(a.sets_for(t.vertex("l_w_1")).private_boundary ==
        std::vector<int>{t.vertex("u")});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(solve(Graph(2, {}), ParameterKind::gamma_b), std::invalid_argument);
  SolveOptions so;
  so.max_vertices_maximize = 5;
  CHECK_THROWS_AS(solve(fam(FamilyKind::path, {6}), ParameterKind::alpha_bn, so),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_optimal(fam(FamilyKind::path, {3}),
                                    ParameterKind::alpha_bn, 0),
                  std::invalid_argument);
}

TEST_CASE("independence number") {
  CHECK(independence_number(fam(FamilyKind::cycle, {5})).value == 2);
  CHECK(independence_number(fam(FamilyKind::complete, {5})).value == 1);
  CHECK(independence_number(fam(FamilyKind::path, {6})).value == 3);
  CHECK(independence_number(fam(FamilyKind::grid, {3, 3})).value == 5);
  ParameterResult r = independence_number(Graph(3, {{0, 1}}));  // disconnected ok
  CHECK(r.value == 2);
  CHECK(r.optimal);
  Graph star = fam(FamilyKind::spider, {1, 1, 1, 1});
  ParameterResult s = independence_number(star);
  CHECK(s.value == 4);
  DistanceMatrix d(star);
  CHECK(is_bn_independent(s.witness, star, d));
  CHECK_THROWS_AS(independence_number(fam(FamilyKind::path, {5}), 4),
                  std::invalid_argument);
}

TEST_CASE("oracle internals") {
  Graph p4 = fam(FamilyKind::path, {4});
  auto d = oracle::floyd_warshall(p4);
  CHECK(d[0][3] == 3);
  CHECK(oracle::dominating({2, 0, 0, 1}, d));
  CHECK(!oracle::dominating({1, 0, 0, 0}, d));
  CHECK(oracle::bn_independent({2, 0, 0, 1}, d));
  CHECK(!oracle::bn_independent({2, 0, 1, 0}, d));
  CHECK(oracle::hearing_independent({2, 0, 0, 1}, d));
  CHECK(!oracle::irredundant({2, 0, 0, 1}, d));
  CHECK(oracle::irredundant({1, 0, 0, 1}, d));
  CHECK(oracle::minimal_dominating_full({1, 0, 0, 1}, d));
  CHECK(!oracle::minimal_dominating_full({2, 0, 0, 1}, d));
  CHECK(oracle::maximal_bn_independent({2, 0, 0, 1}, d));
  CHECK(!oracle::maximal_bn_independent({1, 0, 0, 1}, d));
}
