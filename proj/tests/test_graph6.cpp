#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "blab/families.hpp"
#include "blab/graph.hpp"
#include "blab/graph6.hpp"

using namespace blab;

namespace {
Graph fam(FamilyKind k, std::vector<int> args) { return generate(FamilySpec{k, std::move(args)}); }
}  // namespace

TEST_CASE("known encodings") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);
  Graph k3 = parse_graph6("Bw");
  CHECK(k3.n() == 3);
  CHECK(k3.m() == 3);
  CHECK(write_graph6(fam(FamilyKind::complete, {2})) == "A_");
  CHECK(write_graph6(fam(FamilyKind::complete, {3})) == "Bw");
  Graph single = parse_graph6("@");
  CHECK(single.n() == 1);
  CHECK(single.m() == 0);
}

TEST_CASE("round trips across the header boundary") {
  for (int n : {1, 2, 5, 30, 62, 63, 64, 100}) {
    Graph g = fam(FamilyKind::path, {n});
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());
  }
  Graph grid = fam(FamilyKind::grid, {5, 13});  // 65 vertices
  Graph back = parse_graph6(write_graph6(grid));
  CHECK(back.edges() == grid.edges());
  CHECK(write_graph6(grid).substr(0, 1) == "~");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);    // truncated
  CHECK_THROWS_AS(parse_graph6("A_X"), std::invalid_argument);  // trailing bytes
  CHECK_THROWS_AS(parse_graph6("A\x1f"), std::invalid_argument);  // byte below 63
  CHECK_THROWS_AS(parse_graph6("\x7f_"), std::invalid_argument);  // byte above 126
  CHECK_THROWS_AS(parse_graph6("A`"), std::invalid_argument);   // nonzero padding
}

TEST_CASE("labels reset on decode") {
  Graph sp = fam(FamilyKind::spider, {2, 2, 2});
  Graph back = parse_graph6(write_graph6(sp));
  CHECK(back.label(0) == "v_1");  // graph6 carries no labels
  CHECK(back.edges() == sp.edges());
}
