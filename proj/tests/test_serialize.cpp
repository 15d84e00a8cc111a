#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "blab/broadcast.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"
#include "blab/serialize.hpp"
#include "blab/solver.hpp"

using namespace blab;

namespace {
Graph fam(FamilyKind k, std::vector<int> args) { return generate(FamilySpec{k, std::move(args)}); }
}  // namespace

TEST_CASE("result round trip") {
  ParameterResult r = solve(fam(FamilyKind::path, {3}), ParameterKind::alpha_bn);
  std::string text = serialize_result(r);
  ParameterResult back = parse_result(text);
  CHECK(back.kind == r.kind);
  CHECK(back.value == r.value);
  CHECK(back.optimal == r.optimal);
  CHECK(back.witness == r.witness);
  CHECK(back.nodes_explored == r.nodes_explored);
  CHECK(back.elapsed_ms == r.elapsed_ms);
}

TEST_CASE("result key order is fixed") {
  ParameterResult r = solve(fam(FamilyKind::path, {2}), ParameterKind::gamma_b);
  std::string text = serialize_result(r);
  auto pos = [&](const char* key) { return text.find(key); };
  CHECK(pos("\"kind\"") != std::string::npos);
  CHECK(pos("\"kind\"") < pos("\"value\""));
  CHECK(pos("\"value\"") < pos("\"optimal\""));
  CHECK(pos("\"optimal\"") < pos("\"witness\""));
  CHECK(pos("\"witness\"") < pos("\"nodes_explored\""));
  CHECK(pos("\"nodes_explored\"") < pos("\"elapsed_ms\""));
  CHECK(text.find("\"strengths\"") != std::string::npos);
}

TEST_CASE("two equal results serialize identically") {
  Graph g = fam(FamilyKind::spider, {2, 2, 2});
  ParameterResult a = solve(g, ParameterKind::alpha_bn);
  ParameterResult b = solve(g, ParameterKind::alpha_bn);
  b.elapsed_ms = a.elapsed_ms;  // wall-clock field is the only nondeterministic one
  CHECK(serialize_result(a) == serialize_result(b));
}

TEST_CASE("graph round trip") {
  Graph g = fam(FamilyKind::spider, {2, 2, 2});
  std::string text = serialize_graph(g);
  Graph back = parse_graph(text);
  CHECK(back.n() == g.n());
  CHECK(back.edges() == g.edges());
  CHECK(back.labels() == g.labels());
  CHECK(back.vertex("l_2") == g.vertex("l_2"));
}

TEST_CASE("graph parse validation") {
  CHECK_THROWS_AS(parse_graph("not json"), std::exception);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0, 2]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0]]})"), std::invalid_argument);
  Graph plain = parse_graph(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
  CHECK(plain.label(0) == "v_1");  // labels optional
  CHECK(plain.m() == 2);
}

TEST_CASE("broadcast keyed by label") {
  Graph sp = fam(FamilyKind::spider, {2, 2, 2});
  std::vector<int> s(7, 0);
  s[sp.vertex("l_1")] = s[sp.vertex("l_2")] = s[sp.vertex("l_3")] = 2;
  CHECK(broadcast_by_label(Broadcast(s), sp) == R"({"l_1":2,"l_2":2,"l_3":2})");
  CHECK(broadcast_by_label(Broadcast::zero(7), sp) == "{}");
  CHECK_THROWS_AS(broadcast_by_label(Broadcast({1, 0}), sp), std::invalid_argument);
}
