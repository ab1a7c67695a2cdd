#pragma once

#include <cstdint>
#include <optional>

#include "zerosync/dfa.hpp"

namespace zerosync {

enum class SolveStatus {
  found,              // reset word produced
  not_synchronizing,  // proven: no reset word exists
  limit_exceeded,     // search aborted by SolverLimits; nothing is claimed
  not_found,          // bounded enumeration exhausted without an answer
};

struct RtResult {
  SolveStatus status = SolveStatus::not_found;
  std::uint64_t threshold = 0;  // |witness|, meaningful when status == found
  Word witness;                 // a shortest reset word, lexicographically least
  std::uint64_t explored = 0;   // distinct subsets (or words, for brute force) visited
  bool synchronizing = false;   // true iff a reset word was produced

  bool operator==(const RtResult&) const = default;
};

/// Caps for the subset search. Absent fields fall back to the defaults:
/// 2^26 subsets and n^2 word length. Present fields must be positive.
struct SolverLimits {
  std::optional<std::uint64_t> max_subsets;
  std::optional<std::uint64_t> max_length;
};

/// Internal engine selection, exposed for tests and benchmarks. All engines
/// produce identical results; `automatic` picks by state count.
enum class SolverEngine { automatic, dense, sparse, wide };

/// Exact reset threshold by breadth-first search over subset images of the
/// full state set, shortest witness reconstructed through predecessor links.
/// Letters are expanded in index order, so the witness is the
/// lexicographically least among the shortest reset words. Outcomes:
/// found, not_synchronizing, or limit_exceeded -- never a wrong number.
RtResult exact_reset_threshold(const Dfa& dfa, const SolverLimits& limits = {},
                               SolverEngine engine = SolverEngine::automatic);

/// Oracle by plain word enumeration in length order (lexicographic within a
/// length), with no visited-subset pruning -- deliberately independent of the
/// breadth-first solver. Exponential in max_length; intended for small
/// instances. Requires n <= 64.
RtResult brute_force_rt(const Dfa& dfa, std::uint64_t max_length);

/// Upper bound: repeatedly append the shortest word that strictly shrinks the
/// current image, found by pair-merge breadth-first search. Returns a valid
/// reset word (never shorter than the exact threshold), or absent when the
/// automaton is not synchronizing.
std::optional<Word> greedy_upper_bound(const Dfa& dfa);

/// True iff w maps the full state set to a singleton.
bool verify_reset_word(const Dfa& dfa, const Word& w);

}  // namespace zerosync
