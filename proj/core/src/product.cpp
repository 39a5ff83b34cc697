#include "ltsd/product.hpp"

#include <cstdint>
#include <unordered_map>

namespace ltsd {

namespace {

std::set<action> product_alphabet(const std::set<action>& s1, const std::set<action>& s2) {
  std::set<action> out;
  auto keeps = [](const std::set<action>& own, const std::set<action>& other, const action& a) {
    return own.contains(a) && !other.contains(co_action(a));
  };
  for (const action& a : s1)
    if (keeps(s1, s2, a)) out.insert(a);
  for (const action& a : s2)
    if (keeps(s2, s1, a)) out.insert(a);
  return out;
}

}  // namespace

product_result sync_product(const lts& l1, const lts& l2) {
  transition_index left(l1);
  transition_index right(l2);
  const std::set<action>& sigma1 = l1.alphabet();
  const std::set<action>& sigma2 = l2.alphabet();

  auto key = [](state_id a, state_id b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_map<std::uint64_t, state_id> ids;
  product_state_map map;
  std::vector<transition> transitions;

  auto intern = [&](state_id a, state_id b) {
    auto [it, fresh] = ids.try_emplace(key(a, b), static_cast<state_id>(map.pairs.size()));
    if (fresh) map.pairs.emplace_back(a, b);
    return it->second;
  };

  intern(l1.initial(), l2.initial());
  for (state_id current = 0; current < map.pairs.size(); ++current) {
    auto [s, t] = map.pairs[current];
    for (const auto& [a, s2] : left.out(s)) {
      if (a.is_internal()) {
        transitions.push_back({current, action::tau(), intern(s2, t)});
      } else if (sigma2.contains(co_action(a))) {
        for (const auto& [b, t2] : right.out(t, co_action(a)))
          transitions.push_back({current, action::tau(), intern(s2, t2)});
      } else {
        transitions.push_back({current, a, intern(s2, t)});
      }
    }
    for (const auto& [b, t2] : right.out(t)) {
      if (b.is_internal()) {
        transitions.push_back({current, action::tau(), intern(s, t2)});
      } else if (sigma1.contains(co_action(b))) {
        continue;  // joint step, already produced while scanning the left factor
      } else {
        transitions.push_back({current, b, intern(s, t2)});
      }
    }
  }

  lts system(static_cast<state_id>(map.pairs.size()), 0, std::move(transitions),
             product_alphabet(sigma1, sigma2));
  return product_result{std::move(system), std::move(map)};
}

}  // namespace ltsd
