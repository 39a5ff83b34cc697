#include "ltsd/tau.hpp"

#include <algorithm>

#include "graph_detail.hpp"

namespace ltsd {

std::vector<state_id> tau_closure(const transition_index& index, state_id num_states, state_id s) {
  std::vector<bool> seen(num_states, false);
  std::vector<state_id> queue{s};
  seen[s] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [act, dst] : index.out(queue[head], action::tau())) {
      if (!seen[dst]) {
        seen[dst] = true;
        queue.push_back(dst);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<state_id> tau_closure(const lts& l, state_id s) {
  if (s >= l.num_states()) throw std::invalid_argument("state out of range");
  transition_index index(l);
  return tau_closure(index, l.num_states(), s);
}

std::vector<state_id> divergent_states(const lts& l) {
  std::vector<std::vector<state_id>> succ(l.num_states());
  for (const transition& t : l.transitions())
    if (t.act.is_internal()) succ[t.src].push_back(t.dst);

  std::vector<bool> divergent = detail::infinite_path_states(succ);
  std::vector<state_id> out;
  for (state_id s = 0; s < l.num_states(); ++s)
    if (divergent[s]) out.push_back(s);
  return out;
}

}  // namespace ltsd
