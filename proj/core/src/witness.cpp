#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ltsd/equivalence.hpp"

namespace ltsd {

namespace {

// Replay machinery for certifying a claimed partition. Kept independent of
// the refinement and fixpoint code: adjacency, closures and the divergence
// check are computed from first principles here.

struct replay {
  state_id n1;
  state_id total;
  bool divergence;
  std::vector<std::vector<std::pair<action, state_id>>> out;
  std::vector<std::uint32_t> block;
  std::vector<std::vector<state_id>> members;  // per block, ascending

  replay(const lts& l1, const lts& l2, const std::vector<std::vector<state_ref>>& blocks,
         bool divergence)
      : n1(l1.num_states()),
        total(l1.num_states() + l2.num_states()),
        divergence(divergence),
        out(total),
        block(total, UINT32_MAX) {
    for (const transition& t : l1.transitions()) out[t.src].emplace_back(t.act, t.dst);
    for (const transition& t : l2.transitions())
      out[n1 + t.src].emplace_back(t.act, static_cast<state_id>(n1 + t.dst));

    members.resize(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const state_ref& r : blocks[b]) {
        if (r.side > 1) throw std::invalid_argument("block member with side other than 0 or 1");
        state_id limit = r.side == 0 ? n1 : static_cast<state_id>(total - n1);
        if (r.state >= limit) throw std::invalid_argument("block member state out of range");
        state_id u = r.side == 0 ? r.state : static_cast<state_id>(n1 + r.state);
        if (block[u] != UINT32_MAX)
          throw std::invalid_argument("a state appears in more than one block");
        block[u] = static_cast<std::uint32_t>(b);
        members[b].push_back(u);
      }
      std::sort(members[b].begin(), members[b].end());
    }
    for (state_id u = 0; u < total; ++u)
      if (block[u] == UINT32_MAX)
        throw std::invalid_argument("the blocks do not cover every state");
  }

  state_ref ref(state_id u) const {
    if (u < n1) return {0, u};
    return {1, static_cast<state_id>(u - n1)};
  }

  std::vector<state_id> internal_closure(state_id s) const {
    std::vector<bool> seen(total, false);
    std::vector<state_id> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& [a, t] : out[queue[head]])
        if (a.is_internal() && !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
    return queue;
  }

  using move = std::pair<action, std::uint32_t>;  // action and target block

  // Everything state s must be able to answer elsewhere in its block: all of
  // its moves except internal ones that stay inside the block.
  std::set<move> obligations(state_id s) const {
    std::set<move> result;
    for (const auto& [a, t] : out[s])
      if (!(a.is_internal() && block[t] == block[s])) result.insert({a, block[t]});
    return result;
  }

  // Everything state t can answer: moves of states in t's own block that are
  // reachable from t by internal steps.
  std::set<move> matchable(state_id t) const {
    std::set<move> result;
    for (state_id th : internal_closure(t)) {
      if (block[th] != block[t]) continue;
      for (const auto& [a, t2] : out[th]) result.insert({a, block[t2]});
    }
    return result;
  }

  // Per-state flag for an infinite internal run that stays inside the own
  // block, by unrolling: a run of length total inside one block must revisit
  // a state, hence extends forever.
  std::vector<bool> divergence_flags() const {
    std::vector<bool> can(total, true);
    for (state_id round = 0; round < total; ++round) {
      std::vector<bool> next(total, false);
      for (state_id s = 0; s < total; ++s)
        for (const auto& [a, t] : out[s])
          if (a.is_internal() && block[t] == block[s] && can[t]) {
            next[s] = true;
            break;
          }
      can = std::move(next);
    }
    return can;
  }

  std::vector<witness_violation> run() const {
    std::vector<witness_violation> violations;

    std::vector<std::set<move>> need(total), have(total);
    for (state_id s = 0; s < total; ++s) {
      need[s] = obligations(s);
      have[s] = matchable(s);
    }
    for (const auto& block_members : members) {
      for (state_id s : block_members) {
        for (state_id t : block_members) {
          if (s == t) continue;
          for (const move& m : need[s]) {
            if (!have[t].count(m)) {
              violations.push_back(witness_violation{
                  ref(s), ref(t), m.first,
                  "a move into block " + std::to_string(m.second) + " has no answer"});
            }
          }
        }
      }
    }

    if (divergence) {
      std::vector<bool> flag = divergence_flags();
      for (const auto& block_members : members) {
        state_id diverging = 0, stable = 0;
        bool seen_diverging = false, seen_stable = false;
        for (state_id s : block_members) {
          if (flag[s] && !seen_diverging) {
            diverging = s;
            seen_diverging = true;
          }
          if (!flag[s] && !seen_stable) {
            stable = s;
            seen_stable = true;
          }
        }
        if (seen_diverging && seen_stable) {
          violations.push_back(
              witness_violation{ref(diverging), ref(stable), action::tau(),
                                "one state has an endless internal run inside the block, "
                                "the other does not"});
        }
      }
    }
    return violations;
  }
};

}  // namespace

std::vector<witness_violation> validate_witness(const lts& l1, const lts& l2,
                                                const std::vector<std::vector<state_ref>>& blocks,
                                                bool divergence) {
  return replay(l1, l2, blocks, divergence).run();
}

}  // namespace ltsd
