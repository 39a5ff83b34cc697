#include "ltsd/equivalence.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

#include "graph_detail.hpp"

namespace ltsd {

namespace {

using action_id = std::uint32_t;
using block_id = std::uint32_t;

// Disjoint union of the two inputs with a dense action encoding; action id 0
// is always the internal action.
struct union_graph {
  state_id n1 = 0;
  state_id total = 0;
  state_id init1 = 0;
  state_id init2 = 0;
  std::vector<action> actions;
  std::vector<std::vector<std::pair<action_id, state_id>>> out;

  state_ref ref(state_id u) const {
    if (u < n1) return {0, u};
    return {1, static_cast<state_id>(u - n1)};
  }
};

union_graph make_union(const lts& l1, const lts& l2) {
  union_graph g;
  g.n1 = l1.num_states();
  g.total = l1.num_states() + l2.num_states();
  g.init1 = l1.initial();
  g.init2 = g.n1 + l2.initial();

  std::set<action> acts{action::tau()};
  for (const transition& t : l1.transitions()) acts.insert(t.act);
  for (const transition& t : l2.transitions()) acts.insert(t.act);
  g.actions.assign(acts.begin(), acts.end());

  std::map<action, action_id> ids;
  for (std::size_t i = 0; i < g.actions.size(); ++i)
    ids.emplace(g.actions[i], static_cast<action_id>(i));

  g.out.resize(g.total);
  for (const transition& t : l1.transitions()) g.out[t.src].emplace_back(ids.at(t.act), t.dst);
  for (const transition& t : l2.transitions())
    g.out[g.n1 + t.src].emplace_back(ids.at(t.act), static_cast<state_id>(g.n1 + t.dst));
  for (auto& edges : g.out) std::sort(edges.begin(), edges.end());
  return g;
}

// Signature-based partition refinement over the disjoint union. A state's
// signature is the set of (action, target block) pairs it can realise by
// internal steps that stay inside its own block followed by one step that is
// observable or changes block. With divergence enabled every state also
// carries a flag telling whether an infinite internal run exists that never
// leaves its block, and blocks are split on that flag as well. States of one
// strongly connected component of the within-block internal graph share both
// signature and flag, so signatures are computed per component, propagating
// along the component order (every edge leads to an equal or lower id).
struct refiner {
  const union_graph& g;
  bool divergence;
  std::vector<block_id> block;
  std::uint32_t num_blocks = 1;
  std::vector<bool> div_flag;

  refiner(const union_graph& g, bool divergence)
      : g(g), divergence(divergence), block(g.total, 0), div_flag(g.total, false) {}

  std::vector<std::vector<state_id>> within_block_internal_graph() const {
    std::vector<std::vector<state_id>> succ(g.total);
    for (state_id s = 0; s < g.total; ++s)
      for (const auto& [a, t] : g.out[s])
        if (a == 0 && block[t] == block[s]) succ[s].push_back(t);
    return succ;
  }

  void run() {
    for (;;) {
      auto inert = within_block_internal_graph();
      if (divergence) div_flag = detail::infinite_path_states(inert);
      detail::scc_result scc = detail::strongly_connected_components(inert);

      std::vector<std::vector<state_id>> members(scc.count);
      for (state_id s = 0; s < g.total; ++s) members[scc.component[s]].push_back(s);

      std::vector<std::set<std::pair<action_id, block_id>>> sig(scc.count);
      for (std::uint32_t c = 0; c < scc.count; ++c) {
        for (state_id s : members[c]) {
          for (const auto& [a, t] : g.out[s]) {
            if (a == 0 && block[t] == block[s]) {
              std::uint32_t tc = scc.component[t];
              if (tc != c) sig[c].insert(sig[tc].begin(), sig[tc].end());
            } else {
              sig[c].insert({a, block[t]});
            }
          }
        }
      }

      std::map<std::set<std::pair<action_id, block_id>>, std::uint32_t> sig_ids;
      std::vector<std::uint32_t> comp_sig(scc.count);
      for (std::uint32_t c = 0; c < scc.count; ++c)
        comp_sig[c] =
            sig_ids.try_emplace(sig[c], static_cast<std::uint32_t>(sig_ids.size())).first->second;

      // New block ids are handed out in order of first occurrence over the
      // state scan, which keeps the numbering deterministic and ordered by
      // smallest member.
      std::map<std::tuple<block_id, bool, std::uint32_t>, block_id> fresh;
      std::vector<block_id> next(g.total);
      for (state_id s = 0; s < g.total; ++s) {
        auto key = std::make_tuple(block[s], divergence && div_flag[s], comp_sig[scc.component[s]]);
        next[s] = fresh.try_emplace(key, static_cast<block_id>(fresh.size())).first->second;
      }
      if (fresh.size() == num_blocks) return;  // a pass that splits nothing is final
      num_blocks = static_cast<std::uint32_t>(fresh.size());
      block = std::move(next);
    }
  }
};

// Evidence search once the initial states ended up in different blocks. The
// relation formed by the final blocks plus the initial pair is swept for a
// pair and an action violating the matching clauses (or, with divergence,
// the divergence agreement): the added pair is checked first, the remaining
// same-block pairs in ascending order. Some violation must exist, otherwise
// that relation would itself relate the initial states.
struct sweep {
  const union_graph& g;
  const refiner& r;

  bool related(state_id x, state_id y) const {
    if (r.block[x] == r.block[y]) return true;
    return (x == g.init1 && y == g.init2) || (x == g.init2 && y == g.init1);
  }

  std::vector<state_id> internal_closure(state_id s) const {
    std::vector<bool> seen(g.total, false);
    std::vector<state_id> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& [a, t] : g.out[queue[head]])
        if (a == 0 && !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
    return queue;
  }

  // Can y answer the move x -a-> x2: either a is internal and the target
  // still relates to y, or some internal path leads y to a state related to
  // x that performs a into a state related to x2.
  bool answerable(state_id x, action_id a, state_id x2, state_id y) const {
    if (a == 0 && related(x2, y)) return true;
    for (state_id yh : internal_closure(y)) {
      if (!related(x, yh)) continue;
      for (const auto& [b, y2] : g.out[yh])
        if (b == a && related(x2, y2)) return true;
    }
    return false;
  }

  // Does x have an infinite internal run whose states all relate to y?
  bool diverges_within(state_id x, state_id y) const {
    std::vector<std::vector<state_id>> succ(g.total);
    for (state_id u = 0; u < g.total; ++u) {
      if (!related(u, y)) continue;
      for (const auto& [a, t] : g.out[u])
        if (a == 0 && related(t, y)) succ[u].push_back(t);
    }
    return detail::infinite_path_states(succ)[x];
  }

  std::optional<counterexample_step> check_pair(state_id x, state_id y) const {
    for (std::uint8_t dir = 0; dir < 2; ++dir) {
      state_id from = dir == 0 ? x : y;
      state_id other = dir == 0 ? y : x;
      for (const auto& [a, to] : g.out[from])
        if (!answerable(from, a, to, other))
          return counterexample_step{g.ref(x), g.ref(y), g.actions[a], dir};
    }
    if (r.divergence) {
      bool dx = diverges_within(x, y);
      bool dy = diverges_within(y, x);
      if (dx != dy)
        return counterexample_step{g.ref(x), g.ref(y), action::tau(),
                                   static_cast<std::uint8_t>(dx ? 0 : 1)};
    }
    return std::nullopt;
  }

  counterexample_step run(const std::vector<std::vector<state_id>>& blocks) const {
    if (auto step = check_pair(g.init1, g.init2)) return *step;
    for (const auto& members : blocks)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (auto step = check_pair(members[i], members[j])) return *step;
    throw std::logic_error(
        "no violation found although the initial states are in different blocks; "
        "the refinement result is inconsistent");
  }
};

equivalence_result decide(const lts& l1, const lts& l2, bool divergence) {
  union_graph g = make_union(l1, l2);
  refiner r(g, divergence);
  r.run();

  equivalence_result result;
  result.equivalent = r.block[g.init1] == r.block[g.init2];
  result.blocks.resize(r.num_blocks);
  std::vector<std::vector<state_id>> raw_blocks(r.num_blocks);
  for (state_id s = 0; s < g.total; ++s) {
    result.blocks[r.block[s]].push_back(g.ref(s));
    raw_blocks[r.block[s]].push_back(s);
  }
  if (!result.equivalent) result.counterexample.push_back(sweep{g, r}.run(raw_blocks));
  return result;
}

}  // namespace

equivalence_result branching_bisim(const lts& l1, const lts& l2) { return decide(l1, l2, false); }

equivalence_result dpbb(const lts& l1, const lts& l2) { return decide(l1, l2, true); }

}  // namespace ltsd
