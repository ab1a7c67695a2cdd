#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zerosync {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A word over the input alphabet: a sequence of letter indices.
using Word = std::vector<Letter>;

/// Complete deterministic transition table over n states and k letters.
/// Immutable after construction; every operation on it is a pure function,
/// so instances are safe to share across threads.
class Dfa {
 public:
  /// delta is row-major: delta[q * letter_count + l] is the target of
  /// state q under letter l. Letter names default to "a","b" for k = 2
  /// and "a1".."ak" otherwise.
  Dfa(std::uint32_t state_count, std::uint32_t letter_count,
      std::vector<State> delta, std::vector<std::string> letter_names = {});

  std::uint32_t state_count() const noexcept { return n_; }
  std::uint32_t letter_count() const noexcept { return k_; }

  /// Transition target, bounds assumed valid. step() is the checked variant.
  State target(State q, Letter l) const noexcept {
    return delta_[std::size_t(q) * k_ + l];
  }

  const std::vector<State>& table() const noexcept { return delta_; }
  const std::vector<std::string>& letter_names() const noexcept { return names_; }
  std::optional<Letter> letter_index(std::string_view name) const noexcept;

  bool operator==(const Dfa&) const = default;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<State> delta_;        // row-major, delta_[q * k_ + l]
  std::vector<std::string> names_;  // always k_ entries
};

/// Subset of [0, capacity) with bit-mask semantics. Capacity is fixed at
/// construction and matches the state count of the automaton it is used with.
class StateSet {
 public:
  explicit StateSet(std::uint32_t capacity);

  static StateSet full(std::uint32_t capacity);
  static StateSet of(std::uint32_t capacity, std::initializer_list<State> states);

  std::uint32_t capacity() const noexcept { return capacity_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  void add(State q);
  void remove(State q);
  bool contains(State q) const noexcept;

  /// Members in ascending order.
  std::vector<State> states() const;

  bool operator==(const StateSet&) const = default;

 private:
  std::uint32_t capacity_;
  std::vector<std::uint64_t> words_;
};

/// Detected almost-permutation structure of a binary sink automaton:
/// perm_letter permutes every state; collapse_letter sends exactly one
/// non-sink state (the pre-sink) to the sink and permutes the rest.
struct ApProfile {
  State sink;
  State pre_sink;
  Letter perm_letter;
  Letter collapse_letter;
  bool operator==(const ApProfile&) const = default;
};

/// Checked single transition. Throws std::invalid_argument on bad indices.
State step(const Dfa& dfa, State q, Letter l);

/// Image of a set under one letter.
StateSet apply_letter(const Dfa& dfa, const StateSet& s, Letter l);

/// Image of a set under a word, letters applied left to right.
StateSet apply_word(const Dfa& dfa, const StateSet& s, const Word& w);

/// States fixed by every letter, ascending.
std::vector<State> all_letter_fixed_states(const Dfa& dfa);

/// The unique state fixed by every letter, or absent. With zero or several
/// such states the result is absent and *why (if given) explains which.
std::optional<State> find_sink(const Dfa& dfa, std::string* why = nullptr);

/// True iff letter l maps domain injectively onto domain.
bool is_permutation_on(const Dfa& dfa, Letter l, const StateSet& domain);

/// Least m >= 1 such that the m-fold action of l is the identity on all
/// states; absent when l is not a permutation. Computed as the least common
/// multiple of the cycle lengths.
std::optional<std::uint64_t> letter_order(const Dfa& dfa, Letter l);

/// Detects the almost-permutation shape of a binary automaton, trying both
/// letter orientations. Absent (with *why) when the automaton is not binary,
/// has no unique sink, or neither/both orientations fit. Synchronization is
/// NOT checked here; combine with is_synchronizing().
std::optional<ApProfile> almost_permutation_profile(const Dfa& dfa,
                                                    std::string* why = nullptr);

/// True iff some word maps the full state set to a singleton. With a sink
/// this reduces to "sink reachable from every state"; otherwise all state
/// pairs must be mergeable.
bool is_synchronizing(const Dfa& dfa);

/// Isomorphic automaton with states renamed: state q becomes perm[q].
/// Throws std::invalid_argument unless perm is a bijection on [0, n).
Dfa relabel(const Dfa& dfa, const std::vector<State>& perm);

/// Word from display text: one character per letter when all letter names are
/// single characters, whitespace-separated names otherwise.
Word word_from_string(const Dfa& dfa, const std::string& text);
std::string word_to_string(const Dfa& dfa, const Word& w);

namespace detail {

/// For every unordered pair p < q the length of a shortest merging word,
/// flattened as dist[p * n + q]; UINT32_MAX when the pair cannot merge.
std::vector<std::uint32_t> pair_merge_distances(const Dfa& dfa);

}  // namespace detail

}  // namespace zerosync
