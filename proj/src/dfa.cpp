#include "zerosync/dfa.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace zerosync {

namespace {

std::vector<std::string> default_letter_names(std::uint32_t k) {
  if (k == 2) return {"a", "b"};
  std::vector<std::string> names;
  names.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) names.push_back("a" + std::to_string(i + 1));
  return names;
}

bool printable_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c <= ' ' || c > '~' || c == '#' || c == '"') return false;
  }
  return true;
}

}  // namespace

Dfa::Dfa(std::uint32_t state_count, std::uint32_t letter_count,
         std::vector<State> delta, std::vector<std::string> letter_names)
    : n_(state_count), k_(letter_count), delta_(std::move(delta)),
      names_(std::move(letter_names)) {
  if (n_ == 0) throw std::invalid_argument("automaton needs at least one state");
  if (k_ == 0) throw std::invalid_argument("automaton needs at least one letter");
  if (delta_.size() != std::size_t(n_) * k_) {
    std::ostringstream msg;
    msg << "transition table must have " << std::size_t(n_) * k_
        << " entries, got " << delta_.size();
    throw std::invalid_argument(msg.str());
  }
  for (State t : delta_) {
    if (t >= n_) {
      throw std::invalid_argument("transition target " + std::to_string(t) +
                                  " out of range [0, " + std::to_string(n_) + ")");
    }
  }
  if (names_.empty()) {
    names_ = default_letter_names(k_);
  } else {
    if (names_.size() != k_) {
      throw std::invalid_argument("expected " + std::to_string(k_) +
                                  " letter names, got " + std::to_string(names_.size()));
    }
    for (const auto& name : names_) {
      if (!printable_name(name)) {
        throw std::invalid_argument("letter name \"" + name +
                                    "\" must be printable, without spaces, '#' or '\"'");
      }
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("letter names must be distinct");
    }
  }
}

std::optional<Letter> Dfa::letter_index(std::string_view name) const noexcept {
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

StateSet::StateSet(std::uint32_t capacity)
    : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

StateSet StateSet::full(std::uint32_t capacity) {
  StateSet s(capacity);
  for (std::uint32_t q = 0; q < capacity; ++q) {
    s.words_[q >> 6] |= std::uint64_t(1) << (q & 63);
  }
  return s;
}

StateSet StateSet::of(std::uint32_t capacity, std::initializer_list<State> states) {
  StateSet s(capacity);
  for (State q : states) s.add(q);
  return s;
}

std::size_t StateSet::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

void StateSet::add(State q) {
  if (q >= capacity_) {
    throw std::invalid_argument("state " + std::to_string(q) +
                                " out of range [0, " + std::to_string(capacity_) + ")");
  }
  words_[q >> 6] |= std::uint64_t(1) << (q & 63);
}

void StateSet::remove(State q) {
  if (q >= capacity_) {
    throw std::invalid_argument("state " + std::to_string(q) +
                                " out of range [0, " + std::to_string(capacity_) + ")");
  }
  words_[q >> 6] &= ~(std::uint64_t(1) << (q & 63));
}

bool StateSet::contains(State q) const noexcept {
  if (q >= capacity_) return false;
  return (words_[q >> 6] >> (q & 63)) & 1;
}

std::vector<State> StateSet::states() const {
  std::vector<State> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(State(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

State step(const Dfa& dfa, State q, Letter l) {
  if (q >= dfa.state_count()) {
    throw std::invalid_argument("state " + std::to_string(q) + " out of range [0, " +
                                std::to_string(dfa.state_count()) + ")");
  }
  if (l >= dfa.letter_count()) {
    throw std::invalid_argument("letter " + std::to_string(l) + " out of range [0, " +
                                std::to_string(dfa.letter_count()) + ")");
  }
  return dfa.target(q, l);
}

StateSet apply_letter(const Dfa& dfa, const StateSet& s, Letter l) {
  if (s.capacity() != dfa.state_count()) {
    throw std::invalid_argument("state set capacity " + std::to_string(s.capacity()) +
                                " does not match automaton with " +
                                std::to_string(dfa.state_count()) + " states");
  }
  if (l >= dfa.letter_count()) {
    throw std::invalid_argument("letter " + std::to_string(l) + " out of range [0, " +
                                std::to_string(dfa.letter_count()) + ")");
  }
  StateSet out(s.capacity());
  for (State q : s.states()) out.add(dfa.target(q, l));
  return out;
}

StateSet apply_word(const Dfa& dfa, const StateSet& s, const Word& w) {
  StateSet cur = s;
  if (cur.capacity() != dfa.state_count()) {
    throw std::invalid_argument("state set capacity " + std::to_string(s.capacity()) +
                                " does not match automaton with " +
                                std::to_string(dfa.state_count()) + " states");
  }
  for (Letter l : w) cur = apply_letter(dfa, cur, l);
  return cur;
}

std::vector<State> all_letter_fixed_states(const Dfa& dfa) {
  std::vector<State> fixed;
  for (State q = 0; q < dfa.state_count(); ++q) {
    bool all = true;
    for (Letter l = 0; l < dfa.letter_count(); ++l) {
      if (dfa.target(q, l) != q) {
        all = false;
        break;
      }
    }
    if (all) fixed.push_back(q);
  }
  return fixed;
}

std::optional<State> find_sink(const Dfa& dfa, std::string* why) {
  auto fixed = all_letter_fixed_states(dfa);
  if (fixed.size() == 1) return fixed[0];
  if (why) {
    *why = fixed.empty()
               ? "no state is fixed by every letter"
               : std::to_string(fixed.size()) +
                     " states are fixed by every letter; no unique sink";
  }
  return std::nullopt;
}

bool is_permutation_on(const Dfa& dfa, Letter l, const StateSet& domain) {
  if (domain.capacity() != dfa.state_count()) {
    throw std::invalid_argument("domain capacity does not match the automaton");
  }
  if (l >= dfa.letter_count()) {
    throw std::invalid_argument("letter " + std::to_string(l) + " out of range [0, " +
                                std::to_string(dfa.letter_count()) + ")");
  }
  // Injective into the domain implies onto, the domain being finite.
  StateSet seen(dfa.state_count());
  for (State q : domain.states()) {
    State t = dfa.target(q, l);
    if (!domain.contains(t) || seen.contains(t)) return false;
    seen.add(t);
  }
  return true;
}

std::optional<std::uint64_t> letter_order(const Dfa& dfa, Letter l) {
  const std::uint32_t n = dfa.state_count();
  if (!is_permutation_on(dfa, l, StateSet::full(n))) return std::nullopt;
  std::vector<char> visited(n, 0);
  std::uint64_t order = 1;
  for (State q = 0; q < n; ++q) {
    if (visited[q]) continue;
    std::uint64_t len = 0;
    State cur = q;
    while (!visited[cur]) {
      visited[cur] = 1;
      cur = dfa.target(cur, l);
      ++len;
    }
    const std::uint64_t g = std::gcd(order, len);
    if (order / g > UINT64_MAX / len) {
      throw std::overflow_error("letter order does not fit in 64 bits");
    }
    order = order / g * len;
  }
  return order;
}

namespace {

std::optional<ApProfile> try_orientation(const Dfa& dfa, State sink, Letter perm,
                                         Letter collapse) {
  const std::uint32_t n = dfa.state_count();
  if (!is_permutation_on(dfa, perm, StateSet::full(n))) return std::nullopt;
  std::optional<State> pre_sink;
  for (State q = 0; q < n; ++q) {
    if (q == sink) continue;
    if (dfa.target(q, collapse) == sink) {
      if (pre_sink) return std::nullopt;  // several states collapse to the sink
      pre_sink = q;
    }
  }
  if (!pre_sink) return std::nullopt;
  StateSet domain = StateSet::full(n);
  domain.remove(*pre_sink);
  if (!is_permutation_on(dfa, collapse, domain)) return std::nullopt;
  return ApProfile{sink, *pre_sink, perm, collapse};
}

}  // namespace

std::optional<ApProfile> almost_permutation_profile(const Dfa& dfa, std::string* why) {
  if (dfa.letter_count() != 2) {
    if (why) {
      *why = "needs a binary alphabet, got " + std::to_string(dfa.letter_count()) +
             " letters";
    }
    return std::nullopt;
  }
  std::string sink_why;
  auto sink = find_sink(dfa, &sink_why);
  if (!sink) {
    if (why) *why = sink_why;
    return std::nullopt;
  }
  auto first = try_orientation(dfa, *sink, 0, 1);
  auto second = try_orientation(dfa, *sink, 1, 0);
  if (first && second) {
    if (why) *why = "both letter orientations fit (ambiguous)";
    return std::nullopt;
  }
  if (first) return first;
  if (second) return second;
  if (why) *why = "neither letter orientation fits";
  return std::nullopt;
}

bool is_synchronizing(const Dfa& dfa) {
  const std::uint32_t n = dfa.state_count();
  if (n <= 1) return true;
  if (auto sink = find_sink(dfa)) {
    // Reverse reachability: every state must reach the sink.
    std::vector<std::vector<State>> rev(n);
    for (State q = 0; q < n; ++q) {
      for (Letter l = 0; l < dfa.letter_count(); ++l) {
        rev[dfa.target(q, l)].push_back(q);
      }
    }
    std::vector<char> seen(n, 0);
    std::queue<State> queue;
    queue.push(*sink);
    seen[*sink] = 1;
    std::uint32_t reached = 1;
    while (!queue.empty()) {
      State cur = queue.front();
      queue.pop();
      for (State p : rev[cur]) {
        if (!seen[p]) {
          seen[p] = 1;
          ++reached;
          queue.push(p);
        }
      }
    }
    return reached == n;
  }
  const auto dist = detail::pair_merge_distances(dfa);
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      if (dist[std::size_t(p) * n + q] == UINT32_MAX) return false;
    }
  }
  return true;
}

Dfa relabel(const Dfa& dfa, const std::vector<State>& perm) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  if (perm.size() != n) {
    throw std::invalid_argument("relabeling needs exactly " + std::to_string(n) +
                                " entries");
  }
  std::vector<char> hit(n, 0);
  for (State p : perm) {
    if (p >= n || hit[p]) {
      throw std::invalid_argument("relabeling is not a bijection on [0, " +
                                  std::to_string(n) + ")");
    }
    hit[p] = 1;
  }
  std::vector<State> delta(std::size_t(n) * k);
  for (State q = 0; q < n; ++q) {
    for (Letter l = 0; l < k; ++l) {
      delta[std::size_t(perm[q]) * k + l] = perm[dfa.target(q, l)];
    }
  }
  return Dfa(n, k, std::move(delta), dfa.letter_names());
}

Word word_from_string(const Dfa& dfa, const std::string& text) {
  const auto& names = dfa.letter_names();
  const bool single = std::all_of(names.begin(), names.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  Word w;
  if (single) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      auto l = dfa.letter_index(std::string_view(&c, 1));
      if (!l) {
        throw std::invalid_argument(std::string("unknown letter '") + c + "'");
      }
      w.push_back(*l);
    }
  } else {
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      auto l = dfa.letter_index(token);
      if (!l) throw std::invalid_argument("unknown letter \"" + token + "\"");
      w.push_back(*l);
    }
  }
  return w;
}

std::string word_to_string(const Dfa& dfa, const Word& w) {
  const auto& names = dfa.letter_names();
  const bool single = std::all_of(names.begin(), names.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= dfa.letter_count()) {
      throw std::invalid_argument("letter " + std::to_string(w[i]) +
                                  " out of range [0, " +
                                  std::to_string(dfa.letter_count()) + ")");
    }
    if (!single && i > 0) out += ' ';
    out += names[w[i]];
  }
  return out;
}

namespace detail {

std::vector<std::uint32_t> pair_merge_distances(const Dfa& dfa) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  if (n > 20000) {
    throw std::invalid_argument("pair table would be too large for " +
                                std::to_string(n) + " states");
  }
  const auto pid = [n](State p, State q) { return std::size_t(p) * n + q; };
  std::vector<std::uint32_t> dist(std::size_t(n) * n, UINT32_MAX);
  // Reverse edges of the pair graph; pairs whose image is diagonal seed the
  // queue with distance 1.
  std::vector<std::vector<std::uint32_t>> rev(std::size_t(n) * n);
  std::queue<std::uint32_t> queue;
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      for (Letter l = 0; l < k; ++l) {
        State a = dfa.target(p, l);
        State b = dfa.target(q, l);
        if (a == b) {
          if (dist[pid(p, q)] == UINT32_MAX) {
            dist[pid(p, q)] = 1;
            queue.push(std::uint32_t(pid(p, q)));
          }
        } else {
          if (a > b) std::swap(a, b);
          rev[pid(a, b)].push_back(std::uint32_t(pid(p, q)));
        }
      }
    }
  }
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop();
    for (std::uint32_t pred : rev[cur]) {
      if (dist[pred] == UINT32_MAX) {
        dist[pred] = dist[cur] + 1;
        queue.push(pred);
      }
    }
  }
  return dist;
}

}  // namespace detail

}  // namespace zerosync
