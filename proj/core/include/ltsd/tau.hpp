#pragma once

#include <vector>

#include "ltsd/lts.hpp"

namespace ltsd {

// States reachable from s by zero or more internal transitions, as a sorted
// duplicate-free vector. Always contains s itself.
std::vector<state_id> tau_closure(const lts& l, state_id s);
std::vector<state_id> tau_closure(const transition_index& index, state_id num_states, state_id s);

// States from which an infinite sequence of internal transitions exists,
// i.e. states that can reach a cycle of internal transitions. Sorted and
// duplicate-free; empty when the lts has no internal transitions.
std::vector<state_id> divergent_states(const lts& l);

}  // namespace ltsd
