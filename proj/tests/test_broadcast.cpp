#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "blab/broadcast.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"

using namespace blab;

namespace {
Graph fam(FamilyKind k, std::vector<int> args) { return generate(FamilySpec{k, std::move(args)}); }
}  // namespace

TEST_CASE("broadcast accessors") {
  Broadcast f({0, 2, 1, 0});
  CHECK(f.n() == 4);
  CHECK(f.weight() == 3);
  CHECK(f.strength(1) == 2);
  CHECK(f.broadcasters() == std::vector<int>{1, 2});
  CHECK(f.strength_one() == std::vector<int>{2});
  CHECK(f.strength_two_plus() == std::vector<int>{1});
  Broadcast g = f.with_strength(1, 0);
  CHECK(g.weight() == 1);
  CHECK(f.weight() == 3);
  CHECK(Broadcast::zero(4).weight() == 0);
  CHECK_THROWS_AS(Broadcast({1, -1}), std::invalid_argument);
}

TEST_CASE("validity respects eccentricity caps") {
  Graph g = fam(FamilyKind::path, {3});
  DistanceMatrix d(g);
  CHECK(is_valid(Broadcast({2, 0, 0}), g, d));
  CHECK(is_valid(Broadcast::zero(3), g, d));
  CHECK(!is_valid(Broadcast({3, 0, 0}), g, d));
  CHECK(!is_valid(Broadcast({0, 2, 0}), g, d));  // centre has eccentricity 1
  CHECK_THROWS_AS(require_valid(Broadcast({3, 0, 0}), g, d), std::invalid_argument);
  CHECK_THROWS_AS(require_valid(Broadcast({1, 0}), g, d), std::invalid_argument);
}

TEST_CASE("parameter names") {
  CHECK(all_parameter_kinds().size() == 9);
  for (ParameterKind k : all_parameter_kinds())
    CHECK(parameter_from_name(parameter_name(k)) == k);
  CHECK(is_minimization(ParameterKind::gamma_b));
  CHECK(is_minimization(ParameterKind::i_bn));
  CHECK(!is_minimization(ParameterKind::Gamma_b));
  CHECK(!is_minimization(ParameterKind::alpha_bn));
  CHECK_THROWS_AS(parameter_from_name("gamma"), std::invalid_argument);
}

TEST_CASE("P_4 endpoint pair is dominating but not irredundant") {
  Graph g = fam(FamilyKind::path, {4});
  DistanceMatrix d(g);
  Broadcast f({2, 0, 0, 1});
  CHECK(is_dominating(f, g, d));
  CHECK(!is_irredundant(f, g, d));
  CHECK(!is_minimal_dominating(f, g, d));
  CHECK(!is_minimal_dominating_oracle(f, g, d));
  CHECK(is_bn_independent(f, g, d));
  CHECK(is_hearing_independent(f, g, d));
  BroadcastAnalysis a = analyze(f, g, d);
  CHECK(a.unheard().empty());
  CHECK(a.sets_for(0).ball == std::vector<int>{0, 1, 2});
  CHECK(a.sets_for(0).boundary == std::vector<int>{2});
  CHECK(a.sets_for(0).private_neighbours == std::vector<int>{0, 1});
  CHECK(a.sets_for(0).private_boundary.empty());
  CHECK(a.sets_for(3).private_boundary == std::vector<int>{3});
  CHECK_THROWS_AS(a.sets_for(1), std::invalid_argument);
}

TEST_CASE("C_4 adjacent unit pair is minimal dominating") {
  Graph g = fam(FamilyKind::cycle, {4});
  DistanceMatrix d(g);
  Broadcast f({1, 1, 0, 0});
  CHECK(is_dominating(f, g, d));
  CHECK(is_irredundant(f, g, d));
  CHECK(is_minimal_dominating(f, g, d));
  CHECK(is_minimal_dominating_oracle(f, g, d));
  CHECK(!is_bn_independent(f, g, d));
  CHECK(!bn_pairwise_criterion(f, g, d));
  CHECK(!is_hearing_independent(f, g, d));
  BroadcastAnalysis a = analyze(f, g, d);
  CHECK(a.sets_for(0).private_boundary == std::vector<int>{3});
  CHECK(a.sets_for(1).private_boundary == std::vector<int>{2});
}

TEST_CASE("zero broadcast conventions") {
  Graph g = fam(FamilyKind::path, {3});
  DistanceMatrix d(g);
  Broadcast z = Broadcast::zero(3);
  CHECK(!is_dominating(z, g, d));
  CHECK(!is_irredundant(z, g, d));
  CHECK(is_bn_independent(z, g, d));
  CHECK(is_hearing_independent(z, g, d));
  CHECK(!is_maximal_bn_independent(z, g, d));
}

TEST_CASE("spider full-leaf broadcast is maximal bn-independent") {
  Graph g = fam(FamilyKind::spider, {2, 2, 2});
  DistanceMatrix d(g);
  std::vector<int> s(7, 0);
  s[g.vertex("l_1")] = s[g.vertex("l_2")] = s[g.vertex("l_3")] = 2;
  Broadcast f(s);
  CHECK(f.weight() == 6);
  CHECK(is_bn_independent(f, g, d));
  CHECK(bn_pairwise_criterion(f, g, d));
  CHECK(is_hearing_independent(f, g, d));
  CHECK(is_dominating(f, g, d));
  CHECK(is_maximal_bn_independent(f, g, d));
  CHECK(maximal_bn_characterization_i(f, g, d));
  CHECK(maximal_bn_characterization_ii(f, g, d));
}

TEST_CASE("maximality guards") {
  Graph g = fam(FamilyKind::path, {3});
  DistanceMatrix d(g);
  Broadcast single({2, 0, 0});
  CHECK(is_maximal_bn_independent(single, g, d));
  CHECK(maximal_bn_characterization_i(single, g, d));
  CHECK_THROWS_AS(maximal_bn_characterization_ii(single, g, d), std::invalid_argument);
  Broadcast not_bn({1, 1, 0});
  CHECK_THROWS_AS(is_maximal_bn_independent(not_bn, g, d), std::invalid_argument);
}

TEST_CASE("grid top-row broadcast: private boundaries and uncovered edges") {
  Graph g = fam(FamilyKind::grid, {3, 3});
  DistanceMatrix d(g);
  std::vector<int> s(9, 0);
  s[0] = s[1] = s[2] = 2;  // the whole top row
  Broadcast f(s);
  CHECK(is_dominating(f, g, d));
  CHECK(is_minimal_dominating(f, g, d));
  BroadcastAnalysis a = analyze(f, g, d);
  CHECK(a.sets_for(0).private_boundary == std::vector<int>{6});
  CHECK(a.sets_for(1).private_boundary == std::vector<int>{7});
  CHECK(a.sets_for(2).private_boundary == std::vector<int>{8});
  CHECK(a.uncovered_edges() ==
        std::vector<std::pair<int, int>>{{6, 7}, {7, 8}});
}

TEST_CASE("pointwise comparison") {
  CHECK(compare(Broadcast({1, 0}), Broadcast({1, 1})) == Ordering::less);
  CHECK(compare(Broadcast({1, 1}), Broadcast({1, 0})) == Ordering::greater);
  CHECK(compare(Broadcast({1, 0}), Broadcast({1, 0})) == Ordering::equal);
  CHECK(compare(Broadcast({1, 0}), Broadcast({0, 1})) == Ordering::incomparable);
  CHECK_THROWS_AS(compare(Broadcast({1}), Broadcast({1, 0})), std::invalid_argument);
}
