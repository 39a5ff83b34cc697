#pragma once

#include <cstdint>
#include <vector>

#include "ltsd/lts.hpp"

namespace ltsd::detail {

// Strongly connected components of a directed graph given as an adjacency
// list over states [0, succ.size()). Components are numbered in completion
// order, so every edge leads from a component to one with an equal or lower
// id; cyclic[c] tells whether component c contains a cycle (more than one
// member, or a self-loop).
struct scc_result {
  std::vector<std::uint32_t> component;
  std::vector<bool> cyclic;
  std::uint32_t count = 0;
};

scc_result strongly_connected_components(const std::vector<std::vector<state_id>>& succ);

// States of a directed graph from which an infinite path exists, i.e. states
// that can reach a cycle (including self-loops). succ is an adjacency list
// over states [0, succ.size()).
std::vector<bool> infinite_path_states(const std::vector<std::vector<state_id>>& succ);

}  // namespace ltsd::detail
