#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltsd/lts.hpp"

namespace ltsd {

// Where a component state came from. A control state tracks one source state
// together with a turn tag saying which component currently holds the control
// token (tag 1 prints as "u", tag 2 as "d"). A t-state is the intermediate
// stop a component visits between firing one of its own visible actions and
// reporting the move to its peer.
struct component_state {
  enum class kind : std::uint8_t { control, t_state };

  kind what = kind::control;
  state_id state = 0;   // control: the tracked source state; t_state: the move's target
  std::uint8_t tag = 1;  // 1 or 2
  action move;           // t_state only: the visible action just fired

  friend bool operator==(const component_state&, const component_state&) = default;
};

// Side table mapping each component state id to its origin and a rendered
// display name. Ids stay dense; the names are for output only.
struct component_naming {
  std::vector<component_state> origins;
  std::vector<std::string> names;
};

}  // namespace ltsd
