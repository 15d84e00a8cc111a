#pragma once

#include <string>
#include <vector>

#include "blab/graph.hpp"

namespace blab {

enum class FamilyKind {
  path,
  cycle,
  complete,
  spider,
  grid,
  cartesian_product,
  corona_k1,
  chain_tree_Tk,
  anchor_tree_T,
  linked_trees_Hk,
  layered_Gk,
  complete_times_P3,
  open_question_example,
};

// A parameterized graph family instance, e.g. {spider, {2,2,2}} for the
// spider with three legs of length 2.
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> args;
};

const std::vector<std::string>& family_names();
std::string family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

// Builds the instance; throws std::invalid_argument on a bad arg count or
// out-of-range argument.  Vertex labels follow the usual naming of each
// family (spider head "b", leaves "l_i", chain copies "b_i", ...).
Graph generate(const FamilySpec& spec);

}  // namespace blab
