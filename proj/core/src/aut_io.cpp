#include "ltsd/aut_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace ltsd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

std::uint64_t parse_number(std::string_view token, std::size_t line, const char* what) {
  token = trim(token);
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw parse_error(line, std::string("expected a number for the ") + what + ", got '" +
                                std::string(token) + "'");
  return value;
}

struct header {
  state_id initial;
  std::uint64_t transition_count;
  state_id state_count;
};

header parse_header(std::string_view line, std::size_t line_no) {
  std::string_view t = trim(line);
  if (!t.starts_with("des"))
    throw parse_error(line_no, "expected header 'des (<initial>,<transitions>,<states>)'");
  t = trim(t.substr(3));
  if (t.empty() || t.front() != '(' || t.back() != ')')
    throw parse_error(line_no, "malformed header, expected 'des (i,t,n)'");
  t = t.substr(1, t.size() - 2);

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || t[i] == ',') {
      parts.push_back(t.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw parse_error(line_no, "header needs exactly three fields");

  std::uint64_t initial = parse_number(parts[0], line_no, "initial state");
  std::uint64_t transitions = parse_number(parts[1], line_no, "transition count");
  std::uint64_t states = parse_number(parts[2], line_no, "state count");
  if (states == 0) throw parse_error(line_no, "state count must be at least 1");
  if (states > UINT32_MAX || initial > UINT32_MAX)
    throw parse_error(line_no, "state numbers out of range");
  return header{static_cast<state_id>(initial), transitions, static_cast<state_id>(states)};
}

transition parse_transition(std::string_view line, std::size_t line_no, state_id num_states) {
  std::string_view t = trim(line);
  if (t.empty() || t.front() != '(' || t.back() != ')')
    throw parse_error(line_no, "expected a transition '(src,\"label\",dst)'");
  t = t.substr(1, t.size() - 2);

  std::size_t first_quote = t.find('"');
  std::size_t last_quote = t.rfind('"');
  if (first_quote == std::string_view::npos || last_quote == first_quote)
    throw parse_error(line_no, "transition label must be double-quoted");

  std::string_view src_part = t.substr(0, first_quote);
  std::string_view label = t.substr(first_quote + 1, last_quote - first_quote - 1);
  std::string_view dst_part = t.substr(last_quote + 1);

  src_part = trim(src_part);
  dst_part = trim(dst_part);
  if (src_part.empty() || src_part.back() != ',')
    throw parse_error(line_no, "expected ',' between source and label");
  if (dst_part.empty() || dst_part.front() != ',')
    throw parse_error(line_no, "expected ',' between label and target");
  src_part.remove_suffix(1);
  dst_part.remove_prefix(1);
  if (label.find('"') != std::string_view::npos)
    throw parse_error(line_no, "transition label must not contain '\"'");

  std::uint64_t src = parse_number(src_part, line_no, "source state");
  std::uint64_t dst = parse_number(dst_part, line_no, "target state");
  if (src >= num_states || dst >= num_states)
    throw parse_error(line_no, "state " + std::to_string(std::max(src, dst)) +
                                   " out of range, state count is " + std::to_string(num_states));

  action act;
  try {
    act = action::from_text(label);
  } catch (const std::invalid_argument& e) {
    throw parse_error(line_no, e.what());
  }
  return transition{static_cast<state_id>(src), act, static_cast<state_id>(dst)};
}

}  // namespace

lts parse_aut(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  std::optional<header> head;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    head = parse_header(line, line_no);
    break;
  }
  if (!head) throw parse_error(line_no + 1, "missing 'des' header");

  std::vector<transition> transitions;
  transitions.reserve(head->transition_count);
  while (transitions.size() < head->transition_count) {
    if (!std::getline(in, line))
      throw parse_error(line_no + 1, "unexpected end of input, header announced " +
                                         std::to_string(head->transition_count) + " transitions");
    ++line_no;
    if (skippable(line)) continue;
    transitions.push_back(parse_transition(line, line_no, head->state_count));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line))
      throw parse_error(line_no, "extra content after the announced transitions");
  }

  if (head->initial >= head->state_count)
    throw parse_error(1, "initial state " + std::to_string(head->initial) +
                             " out of range, state count is " + std::to_string(head->state_count));
  return lts::from_transitions(head->state_count, head->initial, std::move(transitions));
}

lts parse_aut(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_aut(in);
}

lts read_aut_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return parse_aut(in);
}

void write_aut(const lts& l, std::ostream& out) {
  struct line {
    state_id src;
    std::string label;
    state_id dst;
  };
  std::vector<line> lines;
  lines.reserve(l.transitions().size());
  for (const transition& t : l.transitions()) lines.push_back({t.src, t.act.text(), t.dst});
  std::sort(lines.begin(), lines.end(), [](const line& a, const line& b) {
    return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
  });

  out << "des (" << l.initial() << ',' << lines.size() << ',' << l.num_states() << ")\n";
  for (const line& ln : lines) out << '(' << ln.src << ",\"" << ln.label << "\"," << ln.dst << ")\n";
}

std::string write_aut(const lts& l) {
  std::ostringstream out;
  write_aut(l, out);
  return out.str();
}

void write_aut_file(const lts& l, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_aut(l, out);
}

}  // namespace ltsd
