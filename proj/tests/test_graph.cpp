#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "blab/families.hpp"
#include "blab/graph.hpp"

using namespace blab;

namespace {
Graph p(int n) { return generate(FamilySpec{FamilyKind::path, {n}}); }
Graph c(int n) { return generate(FamilySpec{FamilyKind::cycle, {n}}); }
}  // namespace

TEST_CASE("graph basics on P_4") {
  Graph g(4, {{1, 0}, {1, 2}, {2, 3}, {2, 1}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);  // duplicate edge collapsed
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
  CHECK(g.label(0) == "v_1");
  CHECK(g.vertex("v_3") == 2);
  CHECK_THROWS_AS(g.vertex("absent"), std::invalid_argument);
}

TEST_CASE("graph constructor validation") {
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {"a", "a"}), std::invalid_argument);
}

TEST_CASE("distance matrix on P_5") {
  Graph g = p(5);
  DistanceMatrix d(g);
  CHECK(d.dist(0, 4) == 4);
  CHECK(d.dist(2, 2) == 0);
  CHECK(d.eccentricity(0) == 4);
  CHECK(d.eccentricity(2) == 2);
  CHECK(d.diameter() == 4);
  CHECK(d.radius() == 2);
  CHECK(d.min_degree() == 1);
  CHECK(d.connected());
  CHECK(d.strength_cap(0) == 4);
  CHECK(d.component_size(0) == 5);
}

TEST_CASE("disconnected graphs and singleton caps") {
  Graph g(3, {{0, 1}});
  DistanceMatrix d(g);
  CHECK(!d.connected());
  CHECK(!d.reachable(0, 2));
  CHECK(d.dist(0, 2) == DistanceMatrix::UNREACHABLE);
  CHECK(d.component_size(2) == 1);
  CHECK(d.strength_cap(2) == 1);  // isolated vertex still may broadcast at 1
  CHECK(d.strength_cap(0) == 1);
  CHECK(!is_connected(g));
}

TEST_CASE("bipartiteness and 2-connectivity") {
  CHECK(is_bipartite(c(4)));
  CHECK(!is_bipartite(c(5)));
  CHECK(is_bipartite(p(6)));
  CHECK(is_two_connected(c(4)));
  CHECK(!is_two_connected(p(4)));
  CHECK(!is_two_connected(p(2)));
  Graph two_blocks(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(!is_two_connected(two_blocks));  // 2 is a cutvertex
}

TEST_CASE("spanning tree") {
  Graph g = c(5);
  Graph t = spanning_tree(g);
  CHECK(t.n() == 5);
  CHECK(t.m() == 4);
  CHECK(is_connected(t));
  CHECK(t.label(3) == g.label(3));
  CHECK_THROWS_AS(spanning_tree(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("cartesian product builds the grid") {
  Graph g = cartesian_product(p(2), p(3));
  Graph grid = generate(FamilySpec{FamilyKind::grid, {2, 3}});
  CHECK(g.n() == 6);
  CHECK(g.m() == 7);
  CHECK(g.edges() == grid.edges());
  CHECK(g.label(0) == "(v_1,v_1)");
}

TEST_CASE("corona with K_1") {
  Graph g = corona_k1(c(3));
  CHECK(g.n() == 6);
  CHECK(g.m() == 6);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(3) == 1);
  CHECK(g.adjacent(0, 3));
  CHECK(g.label(3) == "p_v_1");
}
