#pragma once

#include <cstdint>
#include <string>

#include "ltsd/lts.hpp"

namespace ltsd {

// Controls for random system generation. Everything is derived from the seed
// through a fixed pseudo-random recipe, so equal parameters yield the same
// system on every platform and run.
struct generator_params {
  state_id states = 2;
  std::uint32_t actions = 2;
  // 0 produces a system without any transitions. Any positive value produces
  // a random spanning tree rooted at the initial state (making every state
  // reachable) plus floor(density * states) extra random transitions.
  double density = 1.0;
  std::uint64_t seed = 0;
  // Visible labels are label_prefix followed by 0, 1, ...; all of them make
  // up the alphabet whether used or not.
  std::string label_prefix = "a";
  // Relative weight of the internal action when a label is drawn, against
  // weight 1 per visible label; 0 keeps the system free of internal steps.
  std::uint32_t internal_weight = 0;
  // Allow at most one outgoing transition per (state, label); candidates
  // whose slot is taken are re-homed (tree edges) or dropped (extra edges).
  bool deterministic = false;
};

// Generates a random system with states >= 1, actions >= 1 and a finite,
// non-negative density; anything else raises std::invalid_argument, as does
// a label_prefix that does not form valid visible labels. The initial state
// is 0. Duplicate draws collapse, so transition counts are upper bounds.
lts generate(const generator_params& params);

}  // namespace ltsd
