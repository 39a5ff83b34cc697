#include "ltsd/generator.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ltsd {

lts generate(const generator_params& params) {
  if (params.states < 1) throw std::invalid_argument("states must be at least 1");
  if (params.actions < 1) throw std::invalid_argument("actions must be at least 1");
  if (!(params.density >= 0.0) || !std::isfinite(params.density))
    throw std::invalid_argument("density must be a finite non-negative number");

  std::vector<action> labels;
  std::set<action> alphabet;
  for (std::uint32_t i = 0; i < params.actions; ++i) {
    labels.push_back(action::visible(params.label_prefix + std::to_string(i)));
    alphabet.insert(labels.back());
  }

  // Raw engine output reduced by modulo: biased, but stable across standard
  // library implementations, which distribution classes are not.
  std::mt19937_64 rng(params.seed);
  auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };
  auto draw_label = [&]() -> action {
    std::uint64_t r = draw(std::uint64_t{params.actions} + params.internal_weight);
    return r < params.actions ? labels[static_cast<std::size_t>(r)] : action::tau();
  };

  std::vector<transition> transitions;
  std::set<std::pair<state_id, action>> taken;
  auto place = [&](state_id src, const action& a, state_id dst) {
    transitions.push_back({src, a, dst});
    taken.insert({src, a});
  };
  auto free_label_at = [&](state_id src, action& a) {
    if (!taken.count({src, a})) return true;
    for (const action& l : labels)
      if (!taken.count({src, l})) {
        a = l;
        return true;
      }
    if (params.internal_weight > 0 && !taken.count({src, action::tau()})) {
      a = action::tau();
      return true;
    }
    return false;
  };

  if (params.density > 0.0) {
    for (state_id k = 1; k < params.states; ++k) {
      auto parent = static_cast<state_id>(draw(k));
      action a = draw_label();
      if (params.deterministic) {
        // Keep the tree edge if any earlier state still has a free slot, so
        // reachability survives as long as the label budget allows it.
        bool placed = false;
        for (state_id offset = 0; offset < k && !placed; ++offset) {
          state_id candidate = (parent + offset) % k;
          if (free_label_at(candidate, a)) {
            parent = candidate;
            placed = true;
          }
        }
        if (!placed) continue;
      }
      place(parent, a, k);
    }

    auto extras = static_cast<std::size_t>(params.density * params.states);
    for (std::size_t e = 0; e < extras; ++e) {
      auto src = static_cast<state_id>(draw(params.states));
      auto dst = static_cast<state_id>(draw(params.states));
      action a = draw_label();
      if (params.deterministic && taken.count({src, a})) continue;
      place(src, a, dst);
    }
  }
  return lts(params.states, 0, std::move(transitions), std::move(alphabet));
}

}  // namespace ltsd
