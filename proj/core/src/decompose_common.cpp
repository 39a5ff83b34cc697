#include "ltsd/decompose_common.hpp"

#include <stdexcept>
#include <unordered_set>

#include "decompose_detail.hpp"

namespace ltsd::detail {

std::vector<std::string> effective_state_names(const lts& m,
                                               const std::vector<std::string>* state_names) {
  if (state_names == nullptr) {
    std::vector<std::string> names;
    names.reserve(m.num_states());
    for (state_id s = 0; s < m.num_states(); ++s) names.push_back(std::to_string(s));
    return names;
  }
  if (state_names->size() != m.num_states())
    throw std::invalid_argument("state name table must have one entry per state");
  std::unordered_set<std::string> seen;
  for (const std::string& name : *state_names) {
    if (name.empty()) throw std::invalid_argument("state names must not be empty");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate state name '" + name + "'");
  }
  return *state_names;
}

void check_decomposable(const lts& m, const alphabet_partition& p) {
  if (m.has_internal_transitions())
    throw std::invalid_argument("cannot decompose an lts with internal transitions");
  if (m.has_co_labels())
    throw std::invalid_argument("cannot decompose an lts with co-action labels");
  alphabet_partition::over(m, p.sigma1, p.sigma2);
}

void build_control_states(const lts& m, const std::vector<std::string>& names,
                          component_naming& naming) {
  for (std::uint8_t tag : {std::uint8_t{1}, std::uint8_t{2}}) {
    for (state_id s = 0; s < m.num_states(); ++s) {
      naming.origins.push_back({component_state::kind::control, s, tag, action::tau()});
      naming.names.push_back(control_name(names[s], tag));
    }
  }
}

label_synthesiser::label_synthesiser(const std::set<action>& source_alphabet)
    : source_alphabet_(source_alphabet) {}

action label_synthesiser::fresh(const std::string& text) {
  action a = action::visible(text);
  if (source_alphabet_.contains(a))
    throw std::invalid_argument("synthesised label '" + text +
                                "' collides with an alphabet label; rename the source labels");
  synthesised_.insert(text);
  return a;
}

action label_synthesiser::reuse(const std::string& text) const {
  if (!synthesised_.contains(text))
    throw std::logic_error("label '" + text + "' has not been synthesised");
  return action::visible(text);
}

}  // namespace ltsd::detail
