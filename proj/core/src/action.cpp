#include "ltsd/action.hpp"

#include <stdexcept>

namespace ltsd {

namespace {

void check_label(const std::string& label) {
  if (label.empty())
    throw std::invalid_argument("action label must not be empty");
  if (label.front() == '!')
    throw std::invalid_argument("action label must not start with '!': " + label);
  if (label.find('"') != std::string::npos)
    throw std::invalid_argument("action label must not contain '\"': " + label);
  if (label == "tau" || label == "i")
    throw std::invalid_argument("action label '" + label + "' is reserved for the internal action");
}

}  // namespace

action::action(action_kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

action action::visible(std::string label) {
  check_label(label);
  return action(action_kind::visible, std::move(label));
}

action action::co(std::string label) {
  check_label(label);
  return action(action_kind::co_visible, std::move(label));
}

action action::from_text(std::string_view text) {
  if (text == "tau" || text == "i") return tau();
  if (!text.empty() && text.front() == '!') return co(std::string(text.substr(1)));
  return visible(std::string(text));
}

std::string action::text() const {
  switch (kind_) {
    case action_kind::internal: return "tau";
    case action_kind::visible: return label_;
    case action_kind::co_visible: return "!" + label_;
  }
  return "tau";
}

action co_action(const action& a) {
  switch (a.kind()) {
    case action_kind::internal:
      throw std::invalid_argument("the internal action has no co-action");
    case action_kind::visible: return action::co(a.label());
    case action_kind::co_visible: return action::visible(a.label());
  }
  throw std::invalid_argument("unreachable");
}

std::set<action> co_actions(const std::set<action>& actions) {
  std::set<action> out;
  for (const action& a : actions) out.insert(co_action(a));
  return out;
}

}  // namespace ltsd
