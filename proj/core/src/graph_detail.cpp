#include "graph_detail.hpp"

#include <algorithm>

namespace ltsd::detail {

namespace {

// Iterative Tarjan; assigns component numbers in completion order and
// remembers which components contain a cycle.
struct scc_state {
  const std::vector<std::vector<state_id>>& succ;
  scc_result result;
  std::vector<std::uint32_t> index, lowlink;
  std::vector<bool> on_stack;
  std::vector<state_id> stack;
  std::uint32_t next_index = 0;

  explicit scc_state(const std::vector<std::vector<state_id>>& succ)
      : succ(succ),
        index(succ.size(), UINT32_MAX),
        lowlink(succ.size(), 0),
        on_stack(succ.size(), false) {
    result.component.assign(succ.size(), UINT32_MAX);
  }

  void run(state_id root) {
    struct frame {
      state_id v;
      std::size_t child;
    };
    std::vector<frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      if (child < succ[v].size()) {
        state_id w = succ[v][child++];
        if (index[w] == UINT32_MAX) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::uint32_t comp = result.count++;
          std::size_t members = 0;
          state_id w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            result.component[w] = comp;
            ++members;
          } while (w != v);
          bool self_loop = std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
          result.cyclic.push_back(members > 1 || self_loop);
        }
        frames.pop_back();
        if (!frames.empty()) {
          state_id parent = frames.back().v;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }
};

}  // namespace

scc_result strongly_connected_components(const std::vector<std::vector<state_id>>& succ) {
  scc_state scc(succ);
  for (state_id s = 0; s < succ.size(); ++s)
    if (scc.index[s] == UINT32_MAX) scc.run(s);
  return std::move(scc.result);
}

std::vector<bool> infinite_path_states(const std::vector<std::vector<state_id>>& succ) {
  const auto n = static_cast<state_id>(succ.size());
  scc_result scc = strongly_connected_components(succ);

  std::vector<std::vector<state_id>> pred(n);
  for (state_id s = 0; s < n; ++s)
    for (state_id t : succ[s]) pred[t].push_back(s);

  std::vector<bool> result(n, false);
  std::vector<state_id> queue;
  for (state_id s = 0; s < n; ++s) {
    if (scc.cyclic[scc.component[s]]) {
      result[s] = true;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (state_id p : pred[queue[head]]) {
      if (!result[p]) {
        result[p] = true;
        queue.push_back(p);
      }
    }
  }
  return result;
}

}  // namespace ltsd::detail
