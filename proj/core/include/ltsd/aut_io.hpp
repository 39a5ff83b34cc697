#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ltsd/lts.hpp"

namespace ltsd {

class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Reads the Aldebaran textual format:
//
//   des (<initial>,<transition count>,<state count>)
//   (<src>,"<label>",<dst>)
//   ...
//
// Labels "tau" and "i" denote the internal action, a leading '!' a co-action.
// Blank lines and lines starting with '#' are skipped; whitespace around
// tokens is ignored. Duplicate transition lines collapse into one.
// Malformed input raises parse_error carrying the 1-based line number.
lts parse_aut(std::istream& in);
lts parse_aut(std::string_view text);
lts read_aut_file(const std::string& path);

// Writes the same format with transitions sorted by (source, label text,
// target). The internal action is always written as "tau". Output for equal
// inputs is byte-identical.
void write_aut(const lts& l, std::ostream& out);
std::string write_aut(const lts& l);
void write_aut_file(const lts& l, const std::string& path);

}  // namespace ltsd
