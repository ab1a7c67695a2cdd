#include "zerosync/textio.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zerosync/dfa.hpp"

namespace zerosync {
namespace {

// Strips the comment and splits the remaining text on whitespace.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream stream(body);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::uint64_t parse_number(const std::string& token, std::size_t line,
                           const char* what) {
  std::uint64_t value = 0;
  if (token.empty()) throw ParseError(line, std::string("empty ") + what);
  for (char c : token) {
    if (c < '0' || c > '9')
      throw ParseError(line, std::string("expected a number for ") + what +
                                 ", got '" + token + "'");
    value = value * 10 + std::uint64_t(c - '0');
    if (value > 1'000'000'000) throw ParseError(line, std::string(what) + " out of range");
  }
  return value;
}

}  // namespace

Dfa parse_automaton(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;

  // Header.
  std::size_t n = 0, k = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "dfa")
      throw ParseError(line_no, "expected 'dfa <n> <k>' header, got '" + tokens[0] + "'");
    if (tokens.size() != 3)
      throw ParseError(line_no, "header needs exactly two numbers: dfa <n> <k>");
    n = std::size_t(parse_number(tokens[1], line_no, "state count"));
    k = std::size_t(parse_number(tokens[2], line_no, "letter count"));
    if (n == 0) throw ParseError(line_no, "state count must be positive");
    if (k == 0) throw ParseError(line_no, "letter count must be positive");
    have_header = true;
  }
  if (!have_header) throw ParseError(line_no, "missing 'dfa <n> <k>' header");

  std::vector<std::string> names;
  std::vector<State> delta;
  delta.reserve(n * k);
  std::size_t rows = 0;

  while (rows < n && std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "letters") {
      if (rows > 0)
        throw ParseError(line_no, "'letters' must come before the transition rows");
      if (!names.empty()) throw ParseError(line_no, "duplicate 'letters' line");
      if (tokens.size() != k + 1)
        throw ParseError(line_no, "expected " + std::to_string(k) +
                                      " letter names, got " +
                                      std::to_string(tokens.size() - 1));
      names.assign(tokens.begin() + 1, tokens.end());
      continue;
    }
    if (tokens.size() != k)
      throw ParseError(line_no, "state " + std::to_string(rows) + " needs " +
                                    std::to_string(k) + " targets, got " +
                                    std::to_string(tokens.size()));
    for (const auto& token : tokens) {
      std::uint64_t target = parse_number(token, line_no, "target state");
      if (target >= n)
        throw ParseError(line_no, "target " + token + " out of range for " +
                                      std::to_string(n) + " states");
      delta.push_back(State(target));
    }
    ++rows;
  }
  if (rows < n)
    throw ParseError(line_no, "expected " + std::to_string(n) +
                                  " transition rows, got " + std::to_string(rows));

  // Anything after the table other than comments/blanks is an error.
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line).empty())
      throw ParseError(line_no, "unexpected text after the transition table");
  }

  try {
    return Dfa(n, k, std::move(delta), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Dfa parse_automaton(const std::string& text) {
  std::istringstream stream(text);
  return parse_automaton(stream);
}

std::string serialize_automaton(const Dfa& dfa) {
  std::ostringstream out;
  out << "dfa " << dfa.state_count() << ' ' << dfa.letter_count() << '\n';
  out << "letters";
  for (const auto& name : dfa.letter_names()) out << ' ' << name;
  out << '\n';
  for (State q = 0; q < dfa.state_count(); ++q) {
    for (Letter l = 0; l < dfa.letter_count(); ++l) {
      if (l > 0) out << ' ';
      out << dfa.target(q, l);
    }
    out << '\n';
  }
  return out.str();
}

std::string export_dot(const Dfa& dfa) {
  auto sink = find_sink(dfa);
  std::ostringstream out;
  out << "digraph dfa {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (State q = 0; q < dfa.state_count(); ++q) {
    out << "  q" << q;
    if (sink && *sink == q) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (State q = 0; q < dfa.state_count(); ++q) {
    // Merge parallel edges into one arrow per target.
    std::map<State, std::string> labels;
    for (Letter l = 0; l < dfa.letter_count(); ++l) {
      std::string& label = labels[dfa.target(q, l)];
      if (!label.empty()) label += ',';
      label += dfa.letter_names()[l];
    }
    for (const auto& [target, label] : labels)
      out << "  q" << q << " -> q" << target << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace zerosync
