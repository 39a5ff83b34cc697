#include "ltsd/lts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ltsd {

lts::lts(state_id num_states, state_id initial, std::vector<transition> transitions,
         std::set<action> alphabet)
    : num_states_(num_states),
      initial_(initial),
      transitions_(std::move(transitions)),
      alphabet_(std::move(alphabet)) {
  if (num_states_ == 0) throw std::invalid_argument("an lts needs at least one state");
  if (initial_ >= num_states_)
    throw std::invalid_argument("initial state " + std::to_string(initial_) + " out of range");
  if (alphabet_.contains(action::tau()))
    throw std::invalid_argument("the alphabet must not contain the internal action");
  for (const transition& t : transitions_) {
    if (t.src >= num_states_ || t.dst >= num_states_)
      throw std::invalid_argument("transition endpoint out of range: " + std::to_string(t.src) +
                                  " -" + t.act.text() + "-> " + std::to_string(t.dst));
    if (!t.act.is_internal() && !alphabet_.contains(t.act))
      throw std::invalid_argument("transition label '" + t.act.text() +
                                  "' missing from the alphabet");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
}

lts lts::from_transitions(state_id num_states, state_id initial,
                          std::vector<transition> transitions) {
  std::set<action> alphabet;
  for (const transition& t : transitions)
    if (!t.act.is_internal()) alphabet.insert(t.act);
  return lts(num_states, initial, std::move(transitions), std::move(alphabet));
}

bool lts::has_internal_transitions() const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [](const transition& t) { return t.act.is_internal(); });
}

bool lts::has_co_labels() const {
  return std::any_of(alphabet_.begin(), alphabet_.end(),
                     [](const action& a) { return a.kind() == action_kind::co_visible; });
}

namespace {

std::string join_labels(const std::set<action>& actions) {
  std::ostringstream out;
  bool first = true;
  for (const action& a : actions) {
    if (!first) out << ", ";
    out << a.text();
    first = false;
  }
  return out.str();
}

}  // namespace

alphabet_partition alphabet_partition::over(const lts& m, std::set<action> sigma1,
                                            std::set<action> sigma2) {
  for (const std::set<action>* half : {&sigma1, &sigma2}) {
    for (const action& a : *half) {
      if (a.is_internal())
        throw std::invalid_argument("a partition half must not contain the internal action");
      if (a.kind() == action_kind::co_visible)
        throw std::invalid_argument("a partition half must not contain co-actions: " + a.text());
    }
  }
  std::set<action> overlap;
  std::set_intersection(sigma1.begin(), sigma1.end(), sigma2.begin(), sigma2.end(),
                        std::inserter(overlap, overlap.begin()));
  if (!overlap.empty())
    throw std::invalid_argument("partition halves overlap on: " + join_labels(overlap));

  std::set<action> joined = sigma1;
  joined.insert(sigma2.begin(), sigma2.end());
  std::set<action> missing;
  std::set_difference(m.alphabet().begin(), m.alphabet().end(), joined.begin(), joined.end(),
                      std::inserter(missing, missing.begin()));
  if (!missing.empty())
    throw std::invalid_argument("partition does not cover the alphabet, missing: " +
                                join_labels(missing));
  std::set<action> extra;
  std::set_difference(joined.begin(), joined.end(), m.alphabet().begin(), m.alphabet().end(),
                      std::inserter(extra, extra.begin()));
  if (!extra.empty())
    throw std::invalid_argument("partition mentions labels outside the alphabet: " +
                                join_labels(extra));
  return alphabet_partition{std::move(sigma1), std::move(sigma2)};
}

transition_index::transition_index(const lts& l)
    : out_(l.num_states()), in_(l.num_states()) {
  for (const transition& t : l.transitions()) {
    out_[t.src].emplace_back(t.act, t.dst);
    in_[t.dst].emplace_back(t.act, t.src);
  }
  for (auto& edges : out_) std::sort(edges.begin(), edges.end());
  for (auto& edges : in_) std::sort(edges.begin(), edges.end());
}

std::span<const transition_index::edge> transition_index::out(state_id s, const action& a) const {
  const auto& edges = out_[s];
  auto lo = std::lower_bound(edges.begin(), edges.end(), a,
                             [](const edge& e, const action& key) { return e.first < key; });
  auto hi = lo;
  while (hi != edges.end() && hi->first == a) ++hi;
  if (lo == hi) return {};
  return {&*lo, static_cast<std::size_t>(hi - lo)};
}

}  // namespace ltsd
