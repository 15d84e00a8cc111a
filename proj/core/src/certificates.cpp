#include "blab/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace blab {

namespace {

void require_kind(const FamilySpec& spec, FamilyKind k, const std::string& name) {
  if (spec.kind != k)
    throw std::invalid_argument("certificate " + name + " does not apply to family " +
                                family_name(spec.kind));
}

int uniform_leg_length(const FamilySpec& spec, const std::string& name) {
  for (int a : spec.args)
    if (a != spec.args[0])
      throw std::invalid_argument("certificate " + name + " needs a uniform spider");
  return spec.args[0];
}

bool holds(const std::string& property, const Broadcast& f, const Graph& g,
           const DistanceMatrix& d) {
  if (property == "dominating") return is_dominating(f, g, d);
  if (property == "not_dominating") return !is_dominating(f, g, d);
  if (property == "minimal_dominating") return is_minimal_dominating(f, g, d);
  if (property == "irredundant") return is_irredundant(f, g, d);
  if (property == "bn_independent") return is_bn_independent(f, g, d);
  if (property == "not_bn_independent") return !is_bn_independent(f, g, d);
  if (property == "hearing_independent") return is_hearing_independent(f, g, d);
  if (property == "maximal_bn_independent")
    return is_bn_independent(f, g, d) && is_maximal_bn_independent(f, g, d);
  throw std::logic_error("unknown certificate property: " + property);
}

// Copy suffixes: "" for the single anchor tree, "_i" inside the linked chain.
void anchor_leaf_pattern(const Graph& g, std::vector<int>& s, const std::string& sfx,
                         bool dominating_variant) {
  const char* sides[2] = {"u", "w"};
  for (const char* side : sides)
    for (int j = 1; j <= 3; ++j) {
      std::string leaf = std::string("l_") + side + "_" + std::to_string(j) + sfx;
      if (dominating_variant)
        s[g.vertex(leaf)] = 2;
      else
        s[g.vertex(leaf)] = j == 1 ? 3 : 2;
    }
  if (dominating_variant) s[g.vertex("v" + sfx)] = 1;
}

}  // namespace

std::vector<std::string> certificate_names() {
  return {"spider_bnr_f0",  "spider_bn_full", "spider_h_full", "grid3k_gamma",
          "Tk_gamma_f",     "Tk_bnr_g",       "T_bnr_f14",     "T_gamma_g13",
          "Hk_lambda",      "Hk_bnr_union",   "Gk_bnr_f",      "Gk_dom_set",
          "KnP3_gamma_f",   "KnP3_alpha_h",   "open_question_hd"};
}

Certificate build_certificate(const std::string& name, const FamilySpec& spec) {
  Graph g = generate(spec);
  std::vector<int> s(g.n(), 0);
  int expected_weight = -1;
  std::vector<std::string> props;

  if (name == "spider_bnr_f0") {
    require_kind(spec, FamilyKind::spider, name);
    int r = uniform_leg_length(spec, name);
    int k = static_cast<int>(spec.args.size());
    if (r < 2)
      throw std::invalid_argument("certificate " + name + " needs legs of length >= 2");
    for (int i = 1; i <= k; ++i)
      s[g.vertex("l_" + std::to_string(i))] = i == 1 ? r : r - 1;
    expected_weight = k * (r - 1) + 1;
    props = {"bn_independent", "minimal_dominating"};
  } else if (name == "spider_bn_full") {
    require_kind(spec, FamilyKind::spider, name);
    int r = uniform_leg_length(spec, name);
    int k = static_cast<int>(spec.args.size());
    for (int i = 1; i <= k; ++i) s[g.vertex("l_" + std::to_string(i))] = r;
    expected_weight = k * r;
    props = {"bn_independent"};
  } else if (name == "spider_h_full") {
    require_kind(spec, FamilyKind::spider, name);
    int r = uniform_leg_length(spec, name);
    int k = static_cast<int>(spec.args.size());
    for (int i = 1; i <= k; ++i) s[g.vertex("l_" + std::to_string(i))] = 2 * r - 1;
    expected_weight = k * (2 * r - 1);
    props = {"hearing_independent"};
  } else if (name == "grid3k_gamma") {
    require_kind(spec, FamilyKind::grid, name);
    if (spec.args[0] != 3)
      throw std::invalid_argument("certificate " + name + " needs a 3-row grid");
    int k = spec.args[1];
    for (int j = 1; j <= k; ++j) s[g.vertex("v_1_" + std::to_string(j))] = 2;
    expected_weight = 2 * k;
    props = {"dominating"};
  } else if (name == "Tk_gamma_f") {
    require_kind(spec, FamilyKind::chain_tree_Tk, name);
    int k = spec.args[0];
    for (int i = 1; i <= k; ++i) s[g.vertex("l_" + std::to_string(i))] = 4;
    expected_weight = 4 * k;
    props = {"minimal_dominating"};
  } else if (name == "Tk_bnr_g") {
    require_kind(spec, FamilyKind::chain_tree_Tk, name);
    int k = spec.args[0];
    for (int i = 1; i <= k; ++i) {
      s[g.vertex("l_" + std::to_string(i))] = 2;
      s[g.vertex("l_" + std::to_string(i) + "'")] = 1;
    }
    expected_weight = 3 * k;
    props = {"bn_independent", "minimal_dominating"};
  } else if (name == "T_bnr_f14") {
    require_kind(spec, FamilyKind::anchor_tree_T, name);
    anchor_leaf_pattern(g, s, "", false);
    expected_weight = 14;
    props = {"bn_independent", "irredundant", "not_dominating"};
  } else if (name == "T_gamma_g13") {
    require_kind(spec, FamilyKind::anchor_tree_T, name);
    anchor_leaf_pattern(g, s, "", true);
    expected_weight = 13;
    props = {"minimal_dominating"};
  } else if (name == "Hk_lambda") {
    require_kind(spec, FamilyKind::linked_trees_Hk, name);
    int k = spec.args[0];
    for (int i = 1; i <= 3 * k; ++i)
      anchor_leaf_pattern(g, s, "_" + std::to_string(i), i % 3 == 2);
    expected_weight = 41 * k;
    props = {"minimal_dominating"};
  } else if (name == "Hk_bnr_union") {
    require_kind(spec, FamilyKind::linked_trees_Hk, name);
    int k = spec.args[0];
    for (int i = 1; i <= 3 * k; ++i)
      anchor_leaf_pattern(g, s, "_" + std::to_string(i), false);
    expected_weight = 42 * k;
    props = {"bn_independent", "irredundant", "not_dominating"};
  } else if (name == "Gk_bnr_f") {
    require_kind(spec, FamilyKind::layered_Gk, name);
    int stems = spec.args[0] + 1;
    for (int i = 1; i <= stems; ++i) {
      s[g.vertex("x_" + std::to_string(i))] = 2;
      s[g.vertex("w_" + std::to_string(i))] = 1;
    }
    expected_weight = 3 * stems;
    props = {"bn_independent", "irredundant", "not_dominating"};
  } else if (name == "Gk_dom_set") {
    require_kind(spec, FamilyKind::layered_Gk, name);
    int stems = spec.args[0] + 1;
    s[g.vertex("v")] = 1;
    for (int i = 1; i <= stems; ++i) {
      s[g.vertex("x_" + std::to_string(i))] = 1;
      s[g.vertex("w_" + std::to_string(i))] = 1;
    }
    expected_weight = 2 * spec.args[0] + 3;
    props = {"minimal_dominating"};
  } else if (name == "KnP3_gamma_f") {
    require_kind(spec, FamilyKind::complete_times_P3, name);
    int n = spec.args[0];
    for (int i = 1; i <= n; ++i) s[g.vertex("x_" + std::to_string(i))] = 2;
    expected_weight = 2 * n;
    props = {"minimal_dominating"};
  } else if (name == "KnP3_alpha_h") {
    require_kind(spec, FamilyKind::complete_times_P3, name);
    int n = spec.args[0];
    if (n < 2)
      throw std::invalid_argument("certificate " + name + " needs at least two fibres");
    s[g.vertex("x_1")] = 1;
    s[g.vertex("y_2")] = 1;
    s[g.vertex(n >= 3 ? "z_3" : "z_1")] = 1;
    expected_weight = 3;
    props = {"hearing_independent", "maximal_bn_independent"};
  } else if (name == "open_question_hd") {
    require_kind(spec, FamilyKind::open_question_example, name);
    s[g.vertex("u_1")] = 2;
    s[g.vertex("u_2")] = 2;
    expected_weight = 4;
    props = {"hearing_independent", "minimal_dominating", "not_bn_independent"};
  } else {
    throw std::invalid_argument("unknown certificate: " + name);
  }

  Broadcast f(s);
  DistanceMatrix d(g);
  require_valid(f, g, d);
  if (f.weight() != expected_weight)
    throw std::logic_error("certificate " + name + " has weight " +
                           std::to_string(f.weight()) + ", expected " +
                           std::to_string(expected_weight));
  for (const auto& p : props)
    if (!holds(p, f, g, d))
      throw std::logic_error("certificate " + name + " fails property " + p);

  return Certificate{name, spec, std::move(g), std::move(f), std::move(props)};
}

Broadcast decrement_reduction(const Broadcast& f, int v, const Graph& g) {
  DistanceMatrix d(g);
  if (!is_dominating(f, g, d))
    throw std::invalid_argument("decrement_reduction: broadcast is not dominating");
  if (!bn_pairwise_criterion(f, g, d))
    throw std::invalid_argument("decrement_reduction: broadcast is not bn-independent");
  if (v < 0 || v >= f.n() || f.strength(v) == 0)
    throw std::invalid_argument("decrement_reduction: not a broadcaster");
  BroadcastAnalysis a = analyze(f, g, d);
  if (!a.sets_for(v).private_boundary.empty())
    throw std::invalid_argument("decrement_reduction: private boundary is nonempty");
  // A strength-1 broadcaster of a bn-independent broadcast is always its
  // own private boundary, so an empty one must be broadcasting at >= 2.
  if (f.strength(v) < 2)
    throw std::logic_error("decrement_reduction: strength-1 broadcaster lost itself");

  Broadcast out = f.with_strength(v, f.strength(v) - 1);
  if (!is_dominating(out, g, d) || !bn_pairwise_criterion(out, g, d))
    throw std::logic_error("decrement_reduction: reduction broke domination or overlap");
  // The shrunken boundary is heard by nobody else, so it is all private.
  // At strength 1 the private boundary also holds v itself and any interior
  // private vertices, hence inclusion rather than equality.
  BroadcastAnalysis a2 = analyze(out, g, d);
  const auto& sets = a2.sets_for(v);
  bool boundary_private =
      !sets.boundary.empty() &&
      std::includes(sets.private_boundary.begin(), sets.private_boundary.end(),
                    sets.boundary.begin(), sets.boundary.end());
  if (!boundary_private)
    throw std::logic_error("decrement_reduction: boundary did not turn private");
  return out;
}

ReductionTrace irredundant_reduction(const Broadcast& f, const Graph& g) {
  DistanceMatrix d(g);
  if (!is_dominating(f, g, d))
    throw std::invalid_argument("irredundant_reduction: broadcast is not dominating");
  if (!bn_pairwise_criterion(f, g, d))
    throw std::invalid_argument("irredundant_reduction: broadcast is not bn-independent");
  ReductionTrace t{f, {}};
  for (;;) {
    BroadcastAnalysis a = analyze(t.result, g, d);
    int pick = -1;
    for (int v : t.result.broadcasters())
      if (a.sets_for(v).private_boundary.empty()) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    int from = t.result.strength(pick);
    t.result = decrement_reduction(t.result, pick, g);
    t.steps.push_back({pick, from, from - 1});
  }
  if (!is_minimal_dominating(t.result, g, d))
    throw std::logic_error("irredundant_reduction: result is not minimal dominating");
  return t;
}

}  // namespace blab
