#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "zerosync/dfa.hpp"

namespace zerosync {

/// Reported for malformed automaton text; the message names the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads the automaton text format:
///
///   dfa <n> <k>
///   letters <name> ...   (optional)
///   <k targets> ...      (one row per state, n rows)
///
/// '#' starts a comment; blank lines are ignored.
Dfa parse_automaton(std::istream& in);
Dfa parse_automaton(const std::string& text);

/// Canonical text form: fixed field order and spacing, the letters line
/// always present, so equal automata serialize byte-identically.
std::string serialize_automaton(const Dfa& dfa);

/// Graphviz form: states in index order, the sink double-circled, edges with
/// equal endpoints merged into one label.
std::string export_dot(const Dfa& dfa);

}  // namespace zerosync
