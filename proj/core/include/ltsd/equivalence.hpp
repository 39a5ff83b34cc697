#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltsd/lts.hpp"

namespace ltsd {

// A state of the disjoint union of two LTSs under comparison:
// side 0 means the first lts, side 1 the second.
struct state_ref {
  std::uint8_t side = 0;
  state_id state = 0;

  friend auto operator<=>(const state_ref&, const state_ref&) = default;
};

// One piece of inequivalence evidence: a pair that any relation containing
// the initial pair would be forced to relate, an offered action from one
// element of the pair, and the fact that the other element cannot answer it.
// Divergence disagreements are reported with the internal action, offered by
// the diverging element.
struct counterexample_step {
  state_ref first;
  state_ref second;
  action act;
  std::uint8_t offering = 0;  // 0: 'first' offered the action, 1: 'second'
};

struct equivalence_result {
  bool equivalent = false;
  // Final partition of the disjoint union into equivalence blocks. Blocks
  // are ordered by their smallest member, members by (side, state).
  std::vector<std::vector<state_ref>> blocks;
  // Non-empty exactly when inequivalent.
  std::vector<counterexample_step> counterexample;
};

// Decides branching bisimilarity of the initial states by signature-based
// partition refinement on the disjoint union: starting from one block,
// states are repeatedly split by the set of (action, target block) pairs
// they can realise through internal steps inside their own block followed
// by one observable or block-leaving step, until stable. The verdict,
// blocks and counterexample are deterministic for equal inputs.
equivalence_result branching_bisim(const lts& l1, const lts& l2);

// As branching_bisim, but related states must additionally agree on whether
// an infinite sequence of internal steps exists that never leaves their
// block; blocks are also split on that flag until stable.
equivalence_result dpbb(const lts& l1, const lts& l2);

class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Definition-level fixpoint kept deliberately naive and separate from the
// refinement machinery so the two paths can cross-check each other: start
// from the full relation on the disjoint union and repeatedly delete pairs
// whose matching clauses (and, when divergence_sensitive, whose divergence
// agreement) fail against the current relation, until nothing changes. The
// verdict is whether the initial pair survives. Inputs whose combined state
// count exceeds max_states raise resource_error.
equivalence_result brute_force_bb(const lts& l1, const lts& l2, bool divergence_sensitive,
                                  std::size_t max_states = 400);

struct witness_violation {
  state_ref first;
  state_ref second;
  action act;
  std::string reason;
};

// Replays the matching clauses for every same-block pair of the given
// partition, plus the per-block divergence agreement when divergence is set.
// Returns every violation found; an empty result certifies that relating
// states block-wise is a branching bisimulation (resp. one that preserves
// divergence). Independent of the refinement and fixpoint code paths.
std::vector<witness_violation> validate_witness(const lts& l1, const lts& l2,
                                                const std::vector<std::vector<state_ref>>& blocks,
                                                bool divergence);

}  // namespace ltsd
