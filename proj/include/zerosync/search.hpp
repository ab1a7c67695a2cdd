#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zerosync/dfa.hpp"
#include "zerosync/solver.hpp"

namespace zerosync {

enum class SearchMode { exhaustive, random };

struct SearchConfig {
  std::uint32_t n = 0;            // state count, >= 3
  std::uint64_t min_rt = 0;       // keep candidates with threshold >= min_rt
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;         // random mode
  std::uint64_t samples = 10000;  // random mode draws
  std::uint32_t worker_count = 1;
  SolverLimits limits;
};

/// One search hit. The automaton is the canonical representative of its
/// relabeling class; the witness is its lexicographically least shortest
/// reset word.
struct Finding {
  Dfa dfa;
  std::uint64_t rt = 0;
  Word witness;
};

struct SearchStats {
  std::uint64_t candidates = 0;      // raw triples considered (draws, for random)
  std::uint64_t synchronizing = 0;   // candidates passing the synchronization filter
  std::uint64_t skipped_limits = 0;  // solves aborted by SolverLimits
};

struct SearchResult {
  std::vector<Finding> findings;
  SearchStats stats;
};

/// Streams the search space of binary almost-permutation sink automata with
/// the sink normalized to state 0 and the collapsing letter to letter a:
/// a pre-sink r, a permutation of the non-sink states for letter b, and a
/// permutation of the remaining states for letter a. Only synchronizing
/// candidates are yielded. Exhaustive mode requires n <= 8 (the space grows
/// as (n-1)!^2); random mode samples the same space uniformly.
void enumerate_candidates(const SearchConfig& config,
                          const std::function<void(const Dfa&)>& yield);

/// Exact-solves every candidate and returns the deduplicated findings with
/// threshold >= min_rt, ordered by threshold descending then canonical table
/// ascending. The order and content are deterministic regardless of
/// worker_count, and of seed only in random mode.
SearchResult search_extremal(const SearchConfig& config);

/// Canonical representative under state relabelings that fix state 0: the
/// minimum transition table over all such relabelings. Cost grows as (n-1)!.
Dfa canonical_form(const Dfa& dfa);

}  // namespace zerosync
