#pragma once

#include <set>
#include <string>
#include <vector>

#include "ltsd/lts.hpp"

namespace ltsd {

// A failed diamond: from `state`, the moves `a` (into `after_a`) and `b`
// (into `after_b`) cannot be completed to a common successor by performing
// the respective other action afterwards.
struct confluence_violation {
  state_id state = 0;
  action a;
  action b;
  state_id after_a = 0;
  state_id after_b = 0;

  friend bool operator==(const confluence_violation&, const confluence_violation&) = default;
};

struct confluence_report {
  bool confluent = true;
  // Every failed diamond, ordered by (state, a, after_a, b, after_b).
  std::vector<confluence_violation> violations;
};

// Diamond property of m over two disjoint action sets: whenever a state
// offers a move from each set, each pair of such moves must close to a
// common successor, first performing one action and then the other in
// either order. Actions without transitions participate vacuously. Neither
// set may contain the internal action and the sets must not overlap;
// violations of that raise std::invalid_argument.
confluence_report is_confluent(const lts& m, const std::set<action>& first,
                               const std::set<action>& second);

// Outcome of decomposing a three-state branching system and composing it
// back, for one of the two communication styles.
struct demo_pipeline_report {
  bool branching_equivalent = false;    // product matches the source, divergence-blind
  bool divergence_preserving = false;   // product matches the source, divergence-aware
  bool product_divergent = false;
  bool product_confluent = false;       // over the two halves of the split
  state_id product_states = 0;
  std::size_t product_transitions = 0;
};

// A system with one state offering two independently assigned actions that
// never commute, decomposed and recomposed with both communication styles.
// Both products stay branching-equivalent to the source, yet both introduce
// divergence the source does not have, so neither pipeline preserves the
// divergence-aware equivalence; the failed diamond of the source pinpoints
// why no split of this system can avoid that.
struct impossibility_demo_report {
  lts source;
  bool source_divergent = false;
  confluence_report source_confluence;
  demo_pipeline_report joint;   // synchronously communicating components
  demo_pipeline_report queued;  // components communicating through queues
};

impossibility_demo_report dpbb_impossibility_demo(std::size_t capacity = 1);

// Human-readable multi-line rendering of the demo report.
std::string to_text(const impossibility_demo_report& report);

}  // namespace ltsd
