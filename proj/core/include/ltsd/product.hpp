#pragma once

#include <utility>
#include <vector>

#include "ltsd/lts.hpp"

namespace ltsd {

// Maps each product state id to the factor state pair it denotes,
// in breadth-first discovery order starting from the initial pair.
struct product_state_map {
  std::vector<std::pair<state_id, state_id>> pairs;

  [[nodiscard]] std::pair<state_id, state_id> operator[](state_id s) const { return pairs[s]; }
  [[nodiscard]] state_id size() const { return static_cast<state_id>(pairs.size()); }
};

struct product_result {
  lts system;
  product_state_map map;
};

// Synchronous product of two LTSs. Writing S1/S2 for the factor alphabets:
//
//  - the product alphabet is (S1 u S2) minus every label whose co-action
//    occurs on the opposite side;
//  - a factor may fire a non-internal label alone only when the other side's
//    alphabet lacks its co-action;
//  - a label in S1 whose co-action is in S2 fires only jointly with that
//    co-action, and the joint step is a single internal transition;
//  - internal transitions of either factor interleave freely.
//
// Only the part reachable from the initial pair is built. States are numbered
// in BFS discovery order; successors of a state are explored left factor
// first, each side in (action, target) order.
product_result sync_product(const lts& l1, const lts& l2);

}  // namespace ltsd
