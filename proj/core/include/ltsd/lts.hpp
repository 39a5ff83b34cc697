#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ltsd/action.hpp"

namespace ltsd {

using state_id = std::uint32_t;

struct transition {
  state_id src = 0;
  action act;
  state_id dst = 0;

  friend auto operator<=>(const transition&, const transition&) = default;
};

// A finite labelled transition system with a dense state space [0, num_states),
// a distinguished initial state and a set-valued transition relation.
//
// Invariants established at construction and preserved afterwards:
//  - num_states >= 1 and initial < num_states;
//  - every transition endpoint is < num_states;
//  - the alphabet contains every non-internal label used by a transition
//    and never contains the internal action (it may contain unused labels);
//  - transitions are stored sorted and duplicate-free.
class lts {
public:
  lts(state_id num_states, state_id initial, std::vector<transition> transitions,
      std::set<action> alphabet);

  // Convenience constructor: the alphabet is exactly the set of non-internal
  // labels appearing in the transitions.
  static lts from_transitions(state_id num_states, state_id initial,
                              std::vector<transition> transitions);

  [[nodiscard]] state_id num_states() const { return num_states_; }
  [[nodiscard]] state_id initial() const { return initial_; }
  [[nodiscard]] const std::vector<transition>& transitions() const { return transitions_; }
  [[nodiscard]] const std::set<action>& alphabet() const { return alphabet_; }

  [[nodiscard]] bool has_internal_transitions() const;
  [[nodiscard]] bool has_co_labels() const;

  friend bool operator==(const lts&, const lts&) = default;

private:
  state_id num_states_;
  state_id initial_;
  std::vector<transition> transitions_;
  std::set<action> alphabet_;
};

// A two-way split of an alphabet used to assign each visible action to one
// of two components. Halves are disjoint, may be empty, contain neither the
// internal action nor co-actions, and together cover the given alphabet.
struct alphabet_partition {
  std::set<action> sigma1;
  std::set<action> sigma2;

  // Validates the split against m's alphabet; throws std::invalid_argument
  // with the offending labels spelled out.
  static alphabet_partition over(const lts& m, std::set<action> sigma1,
                                 std::set<action> sigma2);
};

// Forward and backward adjacency for an lts, grouped per state and sorted
// by (action, neighbour). Reconstructing the transition set from either
// direction yields exactly lts::transitions().
class transition_index {
public:
  explicit transition_index(const lts& l);

  using edge = std::pair<action, state_id>;  // (label, neighbour)

  [[nodiscard]] std::span<const edge> out(state_id s) const {
    return {out_[s].data(), out_[s].size()};
  }
  [[nodiscard]] std::span<const edge> in(state_id s) const {
    return {in_[s].data(), in_[s].size()};
  }

  // Targets of all a-labelled transitions leaving s, in increasing order.
  [[nodiscard]] std::span<const edge> out(state_id s, const action& a) const;

private:
  std::vector<std::vector<edge>> out_;
  std::vector<std::vector<edge>> in_;
};

}  // namespace ltsd
