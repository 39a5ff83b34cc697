#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ltsd/equivalence.hpp"

namespace ltsd {

namespace {

// Definition-level fixpoint. This file deliberately builds its own adjacency
// and closures instead of reusing the indexing, refinement or graph helpers,
// so that the fast decision procedure and this one remain independent
// cross-checks of each other.

struct fixpoint {
  state_id n1;
  state_id total;
  state_id init1, init2;
  bool divergence;
  std::vector<std::vector<std::pair<action, state_id>>> out;
  std::vector<std::vector<state_id>> closure;  // internal-step reachability, incl. self
  std::vector<std::vector<bool>> rel;          // symmetric, diagonal stays true

  struct removal {
    action act;
    std::uint8_t offering;
  };
  std::map<std::pair<state_id, state_id>, removal> why_removed;

  fixpoint(const lts& l1, const lts& l2, bool divergence)
      : n1(l1.num_states()),
        total(l1.num_states() + l2.num_states()),
        init1(l1.initial()),
        init2(static_cast<state_id>(n1 + l2.initial())),
        divergence(divergence),
        out(total),
        rel(total, std::vector<bool>(total, true)) {
    for (const transition& t : l1.transitions()) out[t.src].emplace_back(t.act, t.dst);
    for (const transition& t : l2.transitions())
      out[n1 + t.src].emplace_back(t.act, static_cast<state_id>(n1 + t.dst));

    closure.resize(total);
    for (state_id s = 0; s < total; ++s) {
      std::vector<bool> in(total, false);
      in[s] = true;
      bool grown = true;
      while (grown) {
        grown = false;
        for (state_id u = 0; u < total; ++u) {
          if (!in[u]) continue;
          for (const auto& [a, v] : out[u])
            if (a.is_internal() && !in[v]) {
              in[v] = true;
              grown = true;
            }
        }
      }
      for (state_id u = 0; u < total; ++u)
        if (in[u]) closure[s].push_back(u);
    }
  }

  state_ref ref(state_id u) const {
    if (u < n1) return {0, u};
    return {1, static_cast<state_id>(u - n1)};
  }

  // Can y answer the move x -a-> x2 against the current relation: stay put
  // for an internal move with x2 still related, or reach a state related to
  // x by internal steps and perform a into a state related to x2.
  bool answered(state_id x, const action& a, state_id x2, state_id y) const {
    if (a.is_internal() && rel[x2][y]) return true;
    for (state_id yh : closure[y]) {
      if (!rel[x][yh]) continue;
      for (const auto& [b, y2] : out[yh])
        if (b == a && rel[x2][y2]) return true;
    }
    return false;
  }

  // States of the internal-step subgraph induced by everything related to v
  // from which an infinite internal run exists: repeatedly drop states with
  // no internal successor left in the set.
  std::vector<bool> endless_near(state_id v) const {
    std::vector<bool> alive(total, false);
    for (state_id u = 0; u < total; ++u) alive[u] = rel[u][v];
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (state_id u = 0; u < total; ++u) {
        if (!alive[u]) continue;
        bool extendable = false;
        for (const auto& [a, w] : out[u])
          if (a.is_internal() && alive[w]) {
            extendable = true;
            break;
          }
        if (!extendable) {
          alive[u] = false;
          shrunk = true;
        }
      }
    }
    return alive;
  }

  bool can_reach_endless(state_id u, const std::vector<bool>& endless) const {
    for (const auto& [a, w] : out[u])
      if (a.is_internal() && endless[w]) return true;
    return false;
  }

  void run() {
    for (;;) {
      std::vector<std::vector<bool>> endless(total);
      if (divergence)
        for (state_id v = 0; v < total; ++v) endless[v] = endless_near(v);

      std::vector<std::pair<state_id, state_id>> doomed;
      for (state_id u = 0; u < total; ++u) {
        for (state_id v = u + 1; v < total; ++v) {
          if (!rel[u][v]) continue;
          bool broken = false;
          for (std::uint8_t dir = 0; dir < 2 && !broken; ++dir) {
            state_id from = dir == 0 ? u : v;
            state_id other = dir == 0 ? v : u;
            for (const auto& [a, to] : out[from]) {
              if (!answered(from, a, to, other)) {
                doomed.emplace_back(u, v);
                why_removed.try_emplace({u, v}, removal{a, dir});
                broken = true;
                break;
              }
            }
          }
          if (!broken && divergence) {
            bool du = can_reach_endless(u, endless[v]);
            bool dv = can_reach_endless(v, endless[u]);
            if (du != dv) {
              doomed.emplace_back(u, v);
              why_removed.try_emplace({u, v},
                                      removal{action::tau(), static_cast<std::uint8_t>(du ? 0 : 1)});
            }
          }
        }
      }
      if (doomed.empty()) return;
      for (const auto& [u, v] : doomed) rel[u][v] = rel[v][u] = false;
    }
  }

  equivalence_result report() const {
    equivalence_result result;
    result.equivalent = rel[init1][init2];

    // The surviving relation is an equivalence; group every state with the
    // smallest state related to it.
    std::vector<std::uint32_t> root(total);
    std::iota(root.begin(), root.end(), 0);
    for (state_id v = 0; v < total; ++v)
      for (state_id u = 0; u < v; ++u)
        if (rel[u][v]) {
          root[v] = u;
          break;
        }

    std::map<std::uint32_t, std::size_t> block_of_root;
    for (state_id s = 0; s < total; ++s) {
      auto [it, fresh] = block_of_root.try_emplace(root[s], result.blocks.size());
      if (fresh) result.blocks.emplace_back();
      result.blocks[it->second].push_back(ref(s));
    }

    if (!result.equivalent) {
      state_id u = std::min(init1, init2);
      state_id v = std::max(init1, init2);
      const removal& r = why_removed.at({u, v});
      std::uint8_t offering = r.offering;
      if (u != init1) offering = static_cast<std::uint8_t>(1 - offering);
      result.counterexample.push_back(counterexample_step{ref(init1), ref(init2), r.act, offering});
    }
    return result;
  }
};

}  // namespace

equivalence_result brute_force_bb(const lts& l1, const lts& l2, bool divergence_sensitive,
                                  std::size_t max_states) {
  std::size_t total = std::size_t{l1.num_states()} + l2.num_states();
  if (total > max_states)
    throw resource_error("combined state count " + std::to_string(total) +
                         " exceeds the limit of " + std::to_string(max_states) +
                         " for the definition-level decision procedure");
  fixpoint fp(l1, l2, divergence_sensitive);
  fp.run();
  return fp.report();
}

}  // namespace ltsd
