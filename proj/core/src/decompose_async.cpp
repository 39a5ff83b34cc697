#include "ltsd/decompose_async.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "decompose_detail.hpp"

namespace ltsd {

namespace {

using detail::control_id;
using detail::control_name;

// c_{<state>_{u,d}} and c_{<state>_{d,u}}, the queued turn-passing labels.
std::string c_label_text(const std::string& state_name, std::uint8_t from_tag,
                         std::uint8_t to_tag) {
  return "c_{" + state_name + "_{" + detail::tag_suffix(from_tag) + "," +
         detail::tag_suffix(to_tag) + "}}";
}

std::string t_state_name(const action& move, const std::string& target_name, std::uint8_t tag) {
  return "t_{" + move.text() + "," + control_name(target_name, tag) + "}";
}

// One side under construction. Messages are keyed by their target control
// state; the message label is the t-label of that control state.
struct component_builder {
  queue_lts q;
  std::map<state_id, std::uint16_t> message_ids;  // target control -> message id

  std::uint16_t message_for(state_id target_control, const std::string& label) {
    auto it = message_ids.find(target_control);
    if (it != message_ids.end()) return it->second;
    if (q.messages.size() == UINT16_MAX) throw std::invalid_argument("too many message kinds");
    auto id = static_cast<std::uint16_t>(q.messages.size());
    q.messages.push_back({target_control, label});
    message_ids.emplace(target_control, id);
    return id;
  }
};

}  // namespace

async_decomposition decomp_a(const lts& m, const alphabet_partition& p, std::size_t capacity,
                             const std::vector<std::string>* state_names) {
  detail::check_decomposable(m, p);
  if (capacity == 0) throw std::invalid_argument("queue capacity must be at least 1");
  const std::vector<std::string> names = detail::effective_state_names(m, state_names);
  const state_id n = m.num_states();

  component_builder b1, b2;
  b1.q.capacity = b2.q.capacity = capacity;
  b1.q.own_labels = p.sigma1;
  b2.q.own_labels = p.sigma2;
  detail::build_control_states(m, names, b1.q.controls);
  detail::build_control_states(m, names, b2.q.controls);

  // Own t-states, appended after the shared control block, keyed like the
  // synchronous operator.
  std::map<std::pair<action, state_id>, state_id> t_states1, t_states2;
  for (const transition& t : m.transitions()) {
    std::uint8_t tag = p.sigma1.contains(t.act) ? 1 : 2;
    (tag == 1 ? t_states1 : t_states2).emplace(std::make_pair(t.act, t.dst), 0);
  }
  for (auto [table, builder, tag] : {std::tuple{&t_states1, &b1, std::uint8_t{1}},
                                     std::tuple{&t_states2, &b2, std::uint8_t{2}}}) {
    for (auto& [key, id] : *table) {
      id = static_cast<state_id>(builder->q.controls.origins.size());
      builder->q.controls.origins.push_back(
          {component_state::kind::t_state, key.second, tag, key.first});
      builder->q.controls.names.push_back(t_state_name(key.first, names[key.second], tag));
    }
  }

  detail::label_synthesiser synth(m.alphabet());

  // Turn passing: the sender moves, the peer queues a message for the
  // matching control state.
  for (state_id s = 0; s < n; ++s) {
    for (auto [own, peer, from, to] :
         {std::tuple{&b1, &b2, std::uint8_t{1}, std::uint8_t{2}},
          std::tuple{&b2, &b1, std::uint8_t{2}, std::uint8_t{1}}}) {
      action send = synth.fresh(c_label_text(names[s], from, to));
      own->q.local_rules.push_back({control_id(s, from, n), send, control_id(s, to, n)});
      std::uint16_t msg =
          peer->message_for(control_id(s, to, n), detail::t_label_text(names[s], to));
      peer->q.receive_rules.push_back({control_id(s, from, n), co_action(send), msg});
    }
  }

  // Source transitions: the owner fires the action and reports it; the peer
  // queues the report instead of tracking it directly.
  for (const transition& t : m.transitions()) {
    std::uint8_t tag = p.sigma1.contains(t.act) ? 1 : 2;
    component_builder& own = tag == 1 ? b1 : b2;
    component_builder& peer = tag == 1 ? b2 : b1;
    action report = synth.fresh(detail::t_label_text(names[t.dst], tag));
    state_id t_state = (tag == 1 ? t_states1 : t_states2).at({t.act, t.dst});
    own.q.local_rules.push_back({control_id(t.src, tag, n), t.act, t_state});
    own.q.local_rules.push_back({t_state, report, control_id(t.dst, tag, n)});
    std::uint16_t msg =
        peer.message_for(control_id(t.dst, tag, n), detail::t_label_text(names[t.dst], tag));
    peer.q.receive_rules.push_back({control_id(t.src, tag, n), co_action(report), msg});
  }

  for (component_builder* b : {&b1, &b2}) {
    b->q.initial_control = control_id(m.initial(), 1, n);
    auto& locals = b->q.local_rules;
    std::sort(locals.begin(), locals.end(), [](const auto& a, const auto& c) {
      return std::tie(a.src, a.act, a.dst) < std::tie(c.src, c.act, c.dst);
    });
    auto& receives = b->q.receive_rules;
    std::sort(receives.begin(), receives.end(), [](const auto& a, const auto& c) {
      return std::tie(a.control, a.act, a.message) < std::tie(c.control, c.act, c.message);
    });
    receives.erase(std::unique(receives.begin(), receives.end(),
                               [](const auto& a, const auto& c) {
                                 return a.control == c.control && a.act == c.act &&
                                        a.message == c.message;
                               }),
                   receives.end());
  }

  return async_decomposition{std::move(b1.q), std::move(b2.q), p};
}

flattened_queue_lts flatten(const queue_lts& q) {
  if (q.capacity == 0) throw std::invalid_argument("queue capacity must be at least 1");

  // Rules grouped per control state, already sorted by decomp_a's ordering.
  std::vector<std::vector<const queue_lts::local_rule*>> locals(q.num_controls());
  std::vector<std::vector<const queue_lts::receive_rule*>> receives(q.num_controls());
  for (const auto& rule : q.local_rules) locals[rule.src].push_back(&rule);
  for (const auto& rule : q.receive_rules) receives[rule.control].push_back(&rule);

  struct key_hash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const {
      std::size_t h = key.size();
      for (std::uint32_t v : key) h = h * 1000003u + v;
      return h;
    }
  };
  auto key_of = [](state_id control, const std::vector<std::uint16_t>& queue) {
    std::vector<std::uint32_t> key{control};
    key.insert(key.end(), queue.begin(), queue.end());
    return key;
  };

  std::unordered_map<std::vector<std::uint32_t>, state_id, key_hash> ids;
  std::vector<flattened_queue_lts::flat_state> states;
  std::vector<transition> transitions;

  auto intern = [&](state_id control, std::vector<std::uint16_t> queue) {
    auto key = key_of(control, queue);
    auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<state_id>(states.size()));
    if (fresh) states.push_back({control, std::move(queue)});
    return it->second;
  };

  intern(q.initial_control, {});
  for (state_id current = 0; current < states.size(); ++current) {
    // states may reallocate while expanding, so copy the composite state.
    const flattened_queue_lts::flat_state st = states[current];
    for (const auto* rule : locals[st.control])
      transitions.push_back({current, rule->act, intern(rule->dst, st.queue)});
    if (st.queue.size() < q.capacity) {
      for (const auto* rule : receives[st.control]) {
        std::vector<std::uint16_t> grown = st.queue;
        grown.push_back(rule->message);
        transitions.push_back({current, rule->act, intern(st.control, std::move(grown))});
      }
    }
    if (!st.queue.empty()) {
      std::vector<std::uint16_t> rest(st.queue.begin() + 1, st.queue.end());
      transitions.push_back(
          {current, action::tau(),
           intern(q.messages[st.queue.front()].target_control, std::move(rest))});
    }
  }

  std::set<action> alphabet = q.own_labels;
  for (const auto& rule : q.local_rules) alphabet.insert(rule.act);
  for (const auto& rule : q.receive_rules) alphabet.insert(rule.act);

  std::vector<std::string> names;
  names.reserve(states.size());
  for (const auto& st : states) {
    std::string name = q.controls.names[st.control] + "[";
    for (std::size_t i = 0; i < st.queue.size(); ++i) {
      if (i > 0) name += ",";
      name += q.messages[st.queue[i]].label;
    }
    name += "]";
    names.push_back(std::move(name));
  }

  lts system(static_cast<state_id>(states.size()), 0, std::move(transitions),
             std::move(alphabet));
  return flattened_queue_lts{std::move(system), std::move(states), std::move(names)};
}

async_product_result compose_async(const async_decomposition& d) {
  flattened_queue_lts f1 = flatten(d.m1);
  flattened_queue_lts f2 = flatten(d.m2);
  product_result pr = sync_product(f1.system, f2.system);
  for (state_id s = 0; s < pr.map.size(); ++s) {
    auto [a, b] = pr.map[s];
    if (f1.states[a].queue.size() > 1 || f2.states[b].queue.size() > 1)
      throw std::logic_error("composed product state " + std::to_string(s) +
                             " holds more than one queued message");
  }
  return async_product_result{std::move(pr.system), std::move(pr.map), std::move(f1),
                              std::move(f2)};
}

}  // namespace ltsd
