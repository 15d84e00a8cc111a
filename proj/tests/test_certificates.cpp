#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "blab/broadcast.hpp"
#include "blab/certificates.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"

using namespace blab;

namespace {
Certificate build(const std::string& name, FamilyKind k, std::vector<int> args) {
  return build_certificate(name, FamilySpec{k, std::move(args)});
}
bool has_property(const Certificate& c, const std::string& p) {
  return std::find(c.properties.begin(), c.properties.end(), p) != c.properties.end();
}
}  // namespace

TEST_CASE("certificate catalogue") {
  auto names = certificate_names();
  CHECK(names.size() == 15);
  CHECK_THROWS_AS(build("no_such", FamilyKind::path, {3}), std::invalid_argument);
  CHECK_THROWS_AS(build("Tk_gamma_f", FamilyKind::spider, {2, 2}), std::invalid_argument);
}

TEST_CASE("spider certificates") {
  Certificate f0 = build("spider_bnr_f0", FamilyKind::spider, {3, 3, 3});
  CHECK(f0.broadcast.weight() == 7);  // k(r-1)+1
  CHECK(has_property(f0, "bn_independent"));
  CHECK(has_property(f0, "minimal_dominating"));
  CHECK(f0.broadcast.strength(f0.graph.vertex("l_1")) == 3);
  CHECK(f0.broadcast.strength(f0.graph.vertex("l_2")) == 2);

  Certificate full = build("spider_bn_full", FamilyKind::spider, {2, 2, 2, 2});
  CHECK(full.broadcast.weight() == 8);
  CHECK(has_property(full, "bn_independent"));

  Certificate h = build("spider_h_full", FamilyKind::spider, {2, 2, 2});
  CHECK(h.broadcast.weight() == 9);  // 2r-1 per leaf
  CHECK(has_property(h, "hearing_independent"));

  CHECK_THROWS_AS(build("spider_bnr_f0", FamilyKind::spider, {1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build("spider_bn_full", FamilyKind::spider, {2, 3, 2}),
                  std::invalid_argument);
  CHECK_NOTHROW(build("spider_bn_full", FamilyKind::spider, {1, 1, 1}));
}

TEST_CASE("grid and product certificates") {
  Certificate g = build("grid3k_gamma", FamilyKind::grid, {3, 4});
  CHECK(g.broadcast.weight() == 8);
  CHECK(has_property(g, "dominating"));

  Certificate kf = build("KnP3_gamma_f", FamilyKind::complete_times_P3, {3});
  CHECK(kf.broadcast.weight() == 6);
  CHECK(has_property(kf, "minimal_dominating"));

  Certificate kh = build("KnP3_alpha_h", FamilyKind::complete_times_P3, {3});
  CHECK(kh.broadcast.weight() == 3);
  CHECK(has_property(kh, "hearing_independent"));
  CHECK(has_property(kh, "maximal_bn_independent"));
  CHECK_NOTHROW(build("KnP3_alpha_h", FamilyKind::complete_times_P3, {2}));
  CHECK_THROWS_AS(build("KnP3_alpha_h", FamilyKind::complete_times_P3, {1}),
                  std::invalid_argument);
}

TEST_CASE("chain and anchor tree certificates") {
  Certificate f = build("Tk_gamma_f", FamilyKind::chain_tree_Tk, {3});
  CHECK(f.broadcast.weight() == 12);
  CHECK(has_property(f, "minimal_dominating"));

  Certificate bnr = build("Tk_bnr_g", FamilyKind::chain_tree_Tk, {3});
  CHECK(bnr.broadcast.weight() == 9);
  CHECK(has_property(bnr, "bn_independent"));
  CHECK(has_property(bnr, "minimal_dominating"));

  Certificate f14 = build("T_bnr_f14", FamilyKind::anchor_tree_T, {});
  CHECK(f14.broadcast.weight() == 14);
  CHECK(has_property(f14, "bn_independent"));
  CHECK(has_property(f14, "irredundant"));
  CHECK(has_property(f14, "not_dominating"));

  Certificate g13 = build("T_gamma_g13", FamilyKind::anchor_tree_T, {});
  CHECK(g13.broadcast.weight() == 13);
  CHECK(has_property(g13, "minimal_dominating"));
}

TEST_CASE("linked tree and layered certificates") {
  Certificate lam = build("Hk_lambda", FamilyKind::linked_trees_Hk, {1});
  CHECK(lam.broadcast.weight() == 41);
  CHECK(has_property(lam, "minimal_dominating"));

  Certificate uni = build("Hk_bnr_union", FamilyKind::linked_trees_Hk, {1});
  CHECK(uni.broadcast.weight() == 42);
  CHECK(has_property(uni, "bn_independent"));
  CHECK(has_property(uni, "irredundant"));
  CHECK(has_property(uni, "not_dominating"));

  Certificate gf = build("Gk_bnr_f", FamilyKind::layered_Gk, {2});
  CHECK(gf.broadcast.weight() == 9);
  Certificate gd = build("Gk_dom_set", FamilyKind::layered_Gk, {2});
  CHECK(gd.broadcast.weight() == 7);
  CHECK(has_property(gd, "minimal_dominating"));
}

TEST_CASE("two-triple certificate") {
  Certificate c = build("open_question_hd", FamilyKind::open_question_example, {});
  CHECK(c.broadcast.weight() == 4);
  CHECK(has_property(c, "hearing_independent"));
  CHECK(has_property(c, "minimal_dominating"));
  CHECK(has_property(c, "not_bn_independent"));
  CHECK(c.broadcast.strength(c.graph.vertex("u_1")) == 2);
  CHECK(c.broadcast.strength(c.graph.vertex("u_2")) == 2);
}

TEST_CASE("decrement reduction on the spider") {
  Graph sp = generate(FamilySpec{FamilyKind::spider, {2, 2, 2}});
  std::vector<int> s(7, 0);
  s[sp.vertex("l_1")] = s[sp.vertex("l_2")] = s[sp.vertex("l_3")] = 2;
  Broadcast f(s);
  Broadcast dec = decrement_reduction(f, sp.vertex("l_1"), sp);
  CHECK(dec.strength(sp.vertex("l_1")) == 1);
  CHECK(dec.weight() == 5);
  DistanceMatrix d(sp);
  CHECK(is_dominating(dec, sp, d));
  CHECK(is_bn_independent(dec, sp, d));
}

TEST_CASE("decrement reduction preconditions") {
  Graph p4 = generate(FamilySpec{FamilyKind::path, {4}});
  // Nonempty private boundary is rejected.
  CHECK_THROWS_AS(decrement_reduction(Broadcast({3, 0, 0, 0}), 0, p4),
                  std::invalid_argument);
  // Non-broadcaster is rejected.
  CHECK_THROWS_AS(decrement_reduction(Broadcast({2, 0, 0, 1}), 1, p4),
                  std::invalid_argument);
  // Non-dominating input is rejected.
  CHECK_THROWS_AS(decrement_reduction(Broadcast({1, 0, 0, 0}), 0, p4),
                  std::invalid_argument);
  // bn-independence is part of the contract even for dominating inputs.
  Graph c4 = generate(FamilySpec{FamilyKind::cycle, {4}});
  CHECK_THROWS_AS(irredundant_reduction(Broadcast({1, 1, 0, 0}), c4),
                  std::invalid_argument);
}

TEST_CASE("irredundant reduction trace on the spider") {
  Graph sp = generate(FamilySpec{FamilyKind::spider, {2, 2, 2}});
  std::vector<int> s(7, 0);
  s[sp.vertex("l_1")] = s[sp.vertex("l_2")] = s[sp.vertex("l_3")] = 2;
  ReductionTrace tr = irredundant_reduction(Broadcast(s), sp);
  REQUIRE(tr.steps.size() == 2);
  CHECK(tr.steps[0].vertex == sp.vertex("l_1"));
  CHECK(tr.steps[0].from == 2);
  CHECK(tr.steps[0].to == 1);
  CHECK(tr.steps[1].vertex == sp.vertex("l_2"));
  CHECK(tr.result.weight() == 4);
  DistanceMatrix d(sp);
  CHECK(is_minimal_dominating(tr.result, sp, d));
  CHECK(2 * tr.result.weight() > 6);
}

TEST_CASE("irredundant reduction is a no-op on minimal inputs") {
  Graph p4 = generate(FamilySpec{FamilyKind::path, {4}});
  ReductionTrace tr = irredundant_reduction(Broadcast({1, 0, 0, 1}), p4);
  CHECK(tr.steps.empty());
  CHECK(tr.result == Broadcast({1, 0, 0, 1}));
  ReductionTrace one = irredundant_reduction(Broadcast({2, 0, 0, 1}), p4);
  CHECK(one.steps.size() == 1);
  CHECK(one.result == Broadcast({1, 0, 0, 1}));
}
