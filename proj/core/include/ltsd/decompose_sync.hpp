#pragma once

#include <string>
#include <vector>

#include "ltsd/decompose_common.hpp"
#include "ltsd/lts.hpp"
#include "ltsd/product.hpp"

namespace ltsd {

// Two synchronously communicating components obtained by splitting one lts.
// Component 1 performs the labels of partition half 1, component 2 those of
// half 2. Fresh c-labels pass the control token between the components and
// fresh t-labels report a completed move to the peer; each fires jointly
// with its co-action in the other component.
struct sync_decomposition {
  lts m1;
  lts m2;
  component_naming naming1;
  component_naming naming2;
  alphabet_partition partition;
};

// Splits m over the partition p. Both components carry a control state for
// every source state and both turn tags; both start at (initial, tag 1).
// The transition structure, writing i for the half owning a and j for the
// other side:
//
//  - turn passing: (s, 1) reaches (s, 2) with a fresh c-label in component 1
//    and with its co-action in component 2, and symmetrically from (s, 2);
//  - for every source transition s -a-> s' with a in half i: component i
//    steps (s, i) -a-> t(a, s') -t_label(s', i)-> (s', i), while component j
//    steps (s, i) -co(t_label(s', i))-> (s', i).
//
// m must have no internal transitions and no co-action labels. state_names,
// when given, must hold one unique non-empty display name per source state;
// synthesised labels are rendered from these names (decimal ids by default)
// and must not collide with alphabet labels (std::invalid_argument).
sync_decomposition decomp_s(const lts& m, const alphabet_partition& p,
                            const std::vector<std::string>* state_names = nullptr);

// sync_product of the two components plus structural checks on the result:
// every visible step leaves a diagonal control pair and enters an
// intermediate pair whose single exit is an internal step onto the next
// diagonal pair, every other internal step flips the turn tag between
// diagonal pairs, and nothing else is reachable. A violation raises
// std::logic_error.
product_result compose_sync(const sync_decomposition& d);

}  // namespace ltsd
