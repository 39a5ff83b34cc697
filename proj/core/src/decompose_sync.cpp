#include "ltsd/decompose_sync.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "decompose_detail.hpp"

namespace ltsd {

namespace {

using detail::control_id;
using detail::control_name;

// c_{<from>,<to>}, the turn-passing label between the two tags of one state.
std::string c_label_text(const std::string& state_name, std::uint8_t from_tag,
                         std::uint8_t to_tag) {
  return "c_{" + control_name(state_name, from_tag) + "," + control_name(state_name, to_tag) +
         "}";
}

std::string t_state_name(const action& move, const std::string& target_name, std::uint8_t tag) {
  return "t_{" + move.text() + "," + control_name(target_name, tag) + "}";
}

lts finish_component(const component_naming& naming, state_id initial,
                     std::vector<transition> transitions, const std::set<action>& own_half) {
  std::set<action> alphabet = own_half;
  for (const transition& t : transitions) alphabet.insert(t.act);
  return lts(static_cast<state_id>(naming.origins.size()), initial, std::move(transitions),
             std::move(alphabet));
}

}  // namespace

sync_decomposition decomp_s(const lts& m, const alphabet_partition& p,
                            const std::vector<std::string>* state_names) {
  detail::check_decomposable(m, p);
  const std::vector<std::string> names = detail::effective_state_names(m, state_names);
  const state_id n = m.num_states();

  component_naming naming1, naming2;
  detail::build_control_states(m, names, naming1);
  detail::build_control_states(m, names, naming2);

  // t-states per component, keyed by (action, target state), in key order.
  std::map<std::pair<action, state_id>, state_id> t_states1, t_states2;
  for (const transition& t : m.transitions()) {
    std::uint8_t tag = p.sigma1.contains(t.act) ? 1 : 2;
    auto& table = tag == 1 ? t_states1 : t_states2;
    table.emplace(std::make_pair(t.act, t.dst), 0);
  }
  for (auto [table, naming, tag] :
       {std::tuple{&t_states1, &naming1, std::uint8_t{1}},
        std::tuple{&t_states2, &naming2, std::uint8_t{2}}}) {
    for (auto& [key, id] : *table) {
      id = static_cast<state_id>(naming->origins.size());
      naming->origins.push_back({component_state::kind::t_state, key.second, tag, key.first});
      naming->names.push_back(t_state_name(key.first, names[key.second], tag));
    }
  }

  detail::label_synthesiser synth(m.alphabet());
  std::vector<transition> tr1, tr2;

  // Turn passing between the two tags of every state, in both components.
  for (state_id s = 0; s < n; ++s) {
    action down = synth.fresh(c_label_text(names[s], 1, 2));
    action up = synth.fresh(c_label_text(names[s], 2, 1));
    tr1.push_back({control_id(s, 1, n), down, control_id(s, 2, n)});
    tr2.push_back({control_id(s, 1, n), co_action(down), control_id(s, 2, n)});
    tr2.push_back({control_id(s, 2, n), up, control_id(s, 1, n)});
    tr1.push_back({control_id(s, 2, n), co_action(up), control_id(s, 1, n)});
  }

  // Each source transition: the owning component fires the action and then
  // reports it, the peer tracks the move on the co-label of the report.
  for (const transition& t : m.transitions()) {
    std::uint8_t tag = p.sigma1.contains(t.act) ? 1 : 2;
    action report = synth.fresh(detail::t_label_text(names[t.dst], tag));
    auto& own = tag == 1 ? tr1 : tr2;
    auto& peer = tag == 1 ? tr2 : tr1;
    state_id t_state = (tag == 1 ? t_states1 : t_states2).at({t.act, t.dst});
    own.push_back({control_id(t.src, tag, n), t.act, t_state});
    own.push_back({t_state, report, control_id(t.dst, tag, n)});
    peer.push_back({control_id(t.src, tag, n), co_action(report), control_id(t.dst, tag, n)});
  }

  state_id initial = control_id(m.initial(), 1, n);
  return sync_decomposition{finish_component(naming1, initial, std::move(tr1), p.sigma1),
                            finish_component(naming2, initial, std::move(tr2), p.sigma2),
                            std::move(naming1), std::move(naming2), p};
}

namespace {

struct shape_checker {
  const sync_decomposition& d;
  const product_result& pr;

  [[nodiscard]] const component_state& left(state_id product_state) const {
    return d.naming1.origins[pr.map[product_state].first];
  }
  [[nodiscard]] const component_state& right(state_id product_state) const {
    return d.naming2.origins[pr.map[product_state].second];
  }

  // Diagonal pair: both components track the same source state with the
  // same tag.
  [[nodiscard]] bool diagonal(state_id s) const {
    const component_state &l = left(s), &r = right(s);
    return l.what == component_state::kind::control &&
           r.what == component_state::kind::control && l.state == r.state && l.tag == r.tag;
  }

  // Intermediate pair: the owning side sits in a t-state, the peer still
  // tracks the same tag in a control state.
  [[nodiscard]] bool intermediate(state_id s) const {
    const component_state &l = left(s), &r = right(s);
    if (l.what == component_state::kind::t_state)
      return r.what == component_state::kind::control && r.tag == l.tag && l.tag == 1;
    if (r.what == component_state::kind::t_state)
      return l.what == component_state::kind::control && l.tag == r.tag && r.tag == 2;
    return false;
  }

  [[nodiscard]] const component_state& pending_move(state_id s) const {
    const component_state& l = left(s);
    return l.what == component_state::kind::t_state ? l : right(s);
  }

  void fail(state_id s, const std::string& message) const {
    throw std::logic_error("composed product state " + std::to_string(s) + ": " + message);
  }

  void run() const {
    if (!diagonal(pr.system.initial()) || left(pr.system.initial()).tag != 1)
      fail(pr.system.initial(), "initial state is not a tag-1 diagonal pair");

    std::vector<std::size_t> out_degree(pr.system.num_states(), 0);
    for (const transition& t : pr.system.transitions()) ++out_degree[t.src];

    for (state_id s = 0; s < pr.system.num_states(); ++s) {
      if (!diagonal(s) && !intermediate(s))
        fail(s, "reachable state is neither diagonal nor intermediate");
      if (intermediate(s) && out_degree[s] != 1)
        fail(s, "intermediate state must have exactly one exit");
    }

    for (const transition& t : pr.system.transitions()) {
      if (!t.act.is_internal()) {
        if (!diagonal(t.src)) fail(t.src, "visible step from a non-diagonal state");
        if (!intermediate(t.dst)) fail(t.dst, "visible step into a non-intermediate state");
        const component_state& src = left(t.src);
        const component_state& mid = pending_move(t.dst);
        std::uint8_t owner = d.partition.sigma1.contains(t.act) ? 1 : 2;
        if (mid.move != t.act || mid.tag != owner || src.tag != owner)
          fail(t.src, "visible step does not match the owning component");
        const component_state& peer =
            owner == 1 ? right(t.dst) : left(t.dst);
        if (peer.state != src.state || peer.tag != src.tag)
          fail(t.dst, "peer moved during a visible step");
      } else if (intermediate(t.src)) {
        if (!diagonal(t.dst)) fail(t.src, "intermediate exit misses the diagonal");
        const component_state& mid = pending_move(t.src);
        if (left(t.dst).state != mid.state || left(t.dst).tag != mid.tag)
          fail(t.src, "intermediate exit lands on the wrong diagonal pair");
      } else {
        if (!diagonal(t.src) || !diagonal(t.dst)) fail(t.src, "internal step between non-diagonal states");
        if (left(t.src).state != left(t.dst).state || left(t.src).tag == left(t.dst).tag)
          fail(t.src, "turn flip changed the tracked state");
      }
    }
  }
};

}  // namespace

product_result compose_sync(const sync_decomposition& d) {
  product_result pr = sync_product(d.m1, d.m2);
  shape_checker{d, pr}.run();
  return pr;
}

}  // namespace ltsd
