#pragma once

#include <set>
#include <string>
#include <vector>

#include "ltsd/decompose_common.hpp"
#include "ltsd/lts.hpp"

namespace ltsd::detail {

// Display names used for label synthesis: the user-provided table after
// validation, or decimal state ids.
std::vector<std::string> effective_state_names(const lts& m,
                                               const std::vector<std::string>* state_names);

// Shared preconditions of both decomposition operators. Throws
// std::invalid_argument when m has internal transitions or co-action labels,
// and re-validates p against m's alphabet.
void check_decomposable(const lts& m, const alphabet_partition& p);

inline state_id control_id(state_id source_state, std::uint8_t tag, state_id num_states) {
  return tag == 1 ? source_state : num_states + source_state;
}

inline std::string tag_suffix(std::uint8_t tag) { return tag == 1 ? "u" : "d"; }

inline std::string control_name(const std::string& state_name, std::uint8_t tag) {
  return state_name + "_" + tag_suffix(tag);
}

// t_{<state>_<tag>}, the label reporting that the tagged control state has
// been reached. Used both as a direct label (sync) and as a message (async).
inline std::string t_label_text(const std::string& state_name, std::uint8_t tag) {
  return "t_{" + control_name(state_name, tag) + "}";
}

// Control states for both turn tags of every source state, shared by both
// operators. Fills naming with the 2n control entries (tag 1 block first).
void build_control_states(const lts& m, const std::vector<std::string>& names,
                          component_naming& naming);

// Registers a synthesised label, rejecting collisions with the source
// alphabet or previously synthesised labels of the same component pair.
class label_synthesiser {
public:
  explicit label_synthesiser(const std::set<action>& source_alphabet);

  action fresh(const std::string& text);
  action reuse(const std::string& text) const;  // previously synthesised label

private:
  const std::set<action>& source_alphabet_;
  std::set<std::string> synthesised_;
};

}  // namespace ltsd::detail
