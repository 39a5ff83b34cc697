#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace ltsd {

enum class action_kind : std::uint8_t { internal, visible, co_visible };

// A transition label. Either the internal action (tau), a visible label,
// or the co-action of a visible label. Visible labels are non-empty, never
// contain '"', never start with '!', and are never the reserved words
// "tau" or "i" (those spell the internal action in the textual format).
class action {
public:
  action() = default;  // internal action

  static action tau() { return action(); }
  static action visible(std::string label);
  static action co(std::string label);

  // Parses the textual form: "tau" and "i" mean the internal action,
  // a leading '!' marks a co-action, anything else is a visible label.
  static action from_text(std::string_view text);

  [[nodiscard]] action_kind kind() const { return kind_; }
  [[nodiscard]] bool is_internal() const { return kind_ == action_kind::internal; }

  // Base label without the co-action marker; empty for the internal action.
  [[nodiscard]] const std::string& label() const { return label_; }

  // Textual form as written in .aut files: "tau", "x" or "!x".
  [[nodiscard]] std::string text() const;

  friend auto operator<=>(const action&, const action&) = default;

private:
  action(action_kind kind, std::string label);

  action_kind kind_ = action_kind::internal;
  std::string label_;
};

// Complement involution: a <-> !a. The internal action has no co-action;
// calling this on it throws std::invalid_argument.
action co_action(const action& a);

// Pointwise lift of co_action to a set of non-internal actions.
std::set<action> co_actions(const std::set<action>& actions);

}  // namespace ltsd
