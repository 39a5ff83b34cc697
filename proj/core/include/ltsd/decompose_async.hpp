#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ltsd/decompose_common.hpp"
#include "ltsd/lts.hpp"
#include "ltsd/product.hpp"

namespace ltsd {

// A message a component can hold in its FIFO queue. Consuming it jumps the
// component's control to target_control; the label is the t-label spelled
// on the wire when the message is produced.
struct queue_message {
  state_id target_control = 0;
  std::string label;
};

// One asynchronously communicating component: a finite control structure
// plus a bounded FIFO queue of pending messages. Its composite states are
// (control, queue contents) and its transitions follow three rule families:
//
//  - local rules move the control and leave the queue untouched
//    (visible moves, t-label reports, c-label sends);
//  - receive rules append a fixed message to the back of the queue without
//    moving the control; they fire only when the queue has room, and in a
//    product only jointly with the peer transition carrying the co-label;
//  - whenever the queue is non-empty its front message m may be consumed by
//    an internal step that jumps the control to m's target.
struct queue_lts {
  struct local_rule {
    state_id src = 0;
    action act;
    state_id dst = 0;
  };
  struct receive_rule {
    state_id control = 0;
    action act;
    std::uint16_t message = 0;
  };

  state_id initial_control = 0;
  component_naming controls;
  std::vector<queue_message> messages;
  std::size_t capacity = 1;
  std::vector<local_rule> local_rules;
  std::vector<receive_rule> receive_rules;
  std::set<action> own_labels;  // the partition half this component performs

  [[nodiscard]] state_id num_controls() const {
    return static_cast<state_id>(controls.origins.size());
  }
};

struct async_decomposition {
  queue_lts m1;
  queue_lts m2;
  alphabet_partition partition;
};

// Splits m over the partition p into two queue components with the given
// queue capacity (at least 1). Control states and display names mirror the
// synchronous operator; the differences are that turn passing and move
// reports reach the peer as queued messages instead of direct joint steps:
//
//  - turn passing: (s, i) sends a fresh c-label and moves to (s, j); the
//    peer receives the co-label at (s, i), queueing the message for (s, j);
//  - for s -a-> s' with a in half i: component i steps
//    (s, i) -a-> t(a, s') -t_label(s', i)-> (s', i); the peer receives
//    co(t_label(s', i)) at (s, i), queueing the message for (s', i).
//
// Preconditions and label synthesis rules match decomp_s.
async_decomposition decomp_a(const lts& m, const alphabet_partition& p,
                             std::size_t capacity = 1,
                             const std::vector<std::string>* state_names = nullptr);

// The reachable composite states of q materialised as a plain lts, numbered
// in BFS discovery order from (initial_control, empty queue). Successors are
// explored local rules first, then receives, then the consume step, each
// family in rule order. Receives that would overflow the capacity are
// omitted. states[k].queue lists message ids front first; names render as
// "<control>[<labels>]".
struct flattened_queue_lts {
  struct flat_state {
    state_id control = 0;
    std::vector<std::uint16_t> queue;
  };

  lts system;
  std::vector<flat_state> states;
  std::vector<std::string> names;
};

flattened_queue_lts flatten(const queue_lts& q);

// Flattens both components and builds their sync_product. Checks that every
// reachable product state keeps at most one message queued on each side
// (std::logic_error otherwise), regardless of the configured capacity.
struct async_product_result {
  lts system;
  product_state_map map;
  flattened_queue_lts flat1;
  flattened_queue_lts flat2;
};

async_product_result compose_async(const async_decomposition& d);

}  // namespace ltsd
