#include "zerosync/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace zerosync {

namespace {

constexpr std::uint32_t kDenseMaxStates = 22;   // visited arrays of size 2^n
constexpr std::uint32_t kSparseMaxStates = 64;  // single-word masks

struct ResolvedLimits {
  std::uint64_t max_subsets;
  std::uint64_t max_length;
};

ResolvedLimits resolve(const SolverLimits& limits, std::uint32_t n) {
  ResolvedLimits out{std::uint64_t(1) << 26, std::uint64_t(n) * n};
  if (limits.max_subsets) {
    if (*limits.max_subsets == 0) {
      throw std::invalid_argument("max_subsets must be positive");
    }
    out.max_subsets = *limits.max_subsets;
  }
  if (limits.max_length) {
    if (*limits.max_length == 0) {
      throw std::invalid_argument("max_length must be positive");
    }
    out.max_length = *limits.max_length;
  }
  return out;
}

// tables[l][q] = target of q under l; transposed from the Dfa layout so the
// inner subset-image loop walks one contiguous array.
std::vector<std::vector<State>> letter_tables(const Dfa& dfa) {
  std::vector<std::vector<State>> tables(dfa.letter_count(),
                                         std::vector<State>(dfa.state_count()));
  for (Letter l = 0; l < dfa.letter_count(); ++l) {
    for (State q = 0; q < dfa.state_count(); ++q) {
      tables[l][q] = dfa.target(q, l);
    }
  }
  return tables;
}

std::uint64_t image64(std::uint64_t mask, const std::vector<State>& table) {
  std::uint64_t out = 0;
  while (mask) {
    const unsigned q = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t(1) << table[q];
  }
  return out;
}

RtResult found_result(Word witness, std::uint64_t explored) {
  RtResult r;
  r.status = SolveStatus::found;
  r.threshold = witness.size();
  r.witness = std::move(witness);
  r.explored = explored;
  r.synchronizing = true;
  return r;
}

RtResult status_result(SolveStatus status, std::uint64_t explored) {
  RtResult r;
  r.status = status;
  r.explored = explored;
  return r;
}

// Flat-array engine: visited/parent arrays indexed by mask, for n small
// enough that 2^n tables fit comfortably in memory.
RtResult solve_dense(const Dfa& dfa, const ResolvedLimits& lim) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  if (n == 1) return found_result({}, 1);

  const auto tables = letter_tables(dfa);
  const std::size_t space = std::size_t(1) << n;
  std::vector<char> seen(space, 0);
  std::vector<std::uint32_t> parent(space, 0);
  std::vector<std::uint8_t> via(space, 0);
  std::vector<std::uint32_t> frontier, next;

  seen[full] = 1;
  std::uint64_t explored = 1;
  frontier.push_back(full);

  const auto reconstruct = [&](std::uint32_t tail) {
    Word w;
    for (std::uint32_t cur = tail; cur != full; cur = parent[cur]) {
      w.push_back(via[cur]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  for (std::uint64_t depth = 0; !frontier.empty(); ++depth) {
    if (depth + 1 > lim.max_length) {
      return status_result(SolveStatus::limit_exceeded, explored);
    }
    next.clear();
    for (std::uint32_t u : frontier) {
      for (Letter l = 0; l < k; ++l) {
        std::uint32_t v = 0;
        std::uint32_t bits = u;
        const auto& table = tables[l];
        while (bits) {
          const unsigned q = std::countr_zero(bits);
          bits &= bits - 1;
          v |= 1u << table[q];
        }
        if (seen[v]) continue;
        if (explored + 1 > lim.max_subsets) {
          return status_result(SolveStatus::limit_exceeded, explored);
        }
        seen[v] = 1;
        parent[v] = u;
        via[v] = std::uint8_t(l);
        ++explored;
        if (std::popcount(v) == 1) return found_result(reconstruct(v), explored);
        next.push_back(v);
      }
    }
    frontier.swap(next);
  }
  return status_result(SolveStatus::not_synchronizing, explored);
}

// Hash-map engine over single-word masks, n <= 64. Nodes are stored in
// discovery order; a level is a contiguous index range.
RtResult solve_sparse(const Dfa& dfa, const ResolvedLimits& lim) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  if (n == 1) return found_result({}, 1);

  const auto tables = letter_tables(dfa);
  std::vector<std::uint64_t> mask_of;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> via;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(1024);

  mask_of.push_back(full);
  parent.push_back(0);
  via.push_back(0xFF);
  index.emplace(full, 0);

  const auto reconstruct = [&](std::uint32_t tail) {
    Word w;
    for (std::uint32_t cur = tail; cur != 0; cur = parent[cur]) {
      w.push_back(via[cur]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::size_t lo = 0, hi = 1;
  for (std::uint64_t depth = 0; lo < hi; ++depth) {
    if (depth + 1 > lim.max_length) {
      return status_result(SolveStatus::limit_exceeded, mask_of.size());
    }
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t u = mask_of[i];
      for (Letter l = 0; l < k; ++l) {
        const std::uint64_t v = image64(u, tables[l]);
        if (index.contains(v)) continue;
        if (mask_of.size() + 1 > lim.max_subsets) {
          return status_result(SolveStatus::limit_exceeded, mask_of.size());
        }
        const auto id = std::uint32_t(mask_of.size());
        mask_of.push_back(v);
        parent.push_back(std::uint32_t(i));
        via.push_back(std::uint8_t(l));
        index.emplace(v, id);
        if (std::popcount(v) == 1) return found_result(reconstruct(id), mask_of.size());
      }
    }
    lo = hi;
    hi = mask_of.size();
  }
  return status_result(SolveStatus::not_synchronizing, mask_of.size());
}

struct WideHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

// Multi-word mask engine for n > 64; same search, wider arithmetic.
RtResult solve_wide(const Dfa& dfa, const ResolvedLimits& lim) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  const std::uint32_t words = (n + 63) / 64;
  if (n == 1) return found_result({}, 1);

  using Mask = std::vector<std::uint64_t>;
  Mask full(words, 0);
  for (std::uint32_t q = 0; q < n; ++q) full[q >> 6] |= std::uint64_t(1) << (q & 63);

  const auto tables = letter_tables(dfa);
  const auto image = [&](const Mask& mask, const std::vector<State>& table) {
    Mask out(words, 0);
    for (std::uint32_t wi = 0; wi < words; ++wi) {
      std::uint64_t bits = mask[wi];
      while (bits) {
        const unsigned q = wi * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const State t = table[q];
        out[t >> 6] |= std::uint64_t(1) << (t & 63);
      }
    }
    return out;
  };
  const auto popcount = [&](const Mask& mask) {
    std::uint64_t total = 0;
    for (std::uint64_t w : mask) total += std::popcount(w);
    return total;
  };

  std::vector<Mask> mask_of;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> via;
  std::unordered_map<Mask, std::uint32_t, WideHash> index;

  mask_of.push_back(full);
  parent.push_back(0);
  via.push_back(0xFF);
  index.emplace(full, 0);

  const auto reconstruct = [&](std::uint32_t tail) {
    Word w;
    for (std::uint32_t cur = tail; cur != 0; cur = parent[cur]) {
      w.push_back(via[cur]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::size_t lo = 0, hi = 1;
  for (std::uint64_t depth = 0; lo < hi; ++depth) {
    if (depth + 1 > lim.max_length) {
      return status_result(SolveStatus::limit_exceeded, mask_of.size());
    }
    for (std::size_t i = lo; i < hi; ++i) {
      for (Letter l = 0; l < k; ++l) {
        Mask v = image(mask_of[i], tables[l]);
        if (index.contains(v)) continue;
        if (mask_of.size() + 1 > lim.max_subsets) {
          return status_result(SolveStatus::limit_exceeded, mask_of.size());
        }
        const auto id = std::uint32_t(mask_of.size());
        parent.push_back(std::uint32_t(i));
        via.push_back(std::uint8_t(l));
        if (popcount(v) == 1) {
          mask_of.push_back(v);
          return found_result(reconstruct(id), mask_of.size());
        }
        index.emplace(v, id);
        mask_of.push_back(std::move(v));
      }
    }
    lo = hi;
    hi = mask_of.size();
  }
  return status_result(SolveStatus::not_synchronizing, mask_of.size());
}

}  // namespace

RtResult exact_reset_threshold(const Dfa& dfa, const SolverLimits& limits,
                               SolverEngine engine) {
  const std::uint32_t n = dfa.state_count();
  const auto lim = resolve(limits, n);
  if (engine == SolverEngine::automatic) {
    engine = (n <= kDenseMaxStates)    ? SolverEngine::dense
             : (n <= kSparseMaxStates) ? SolverEngine::sparse
                                       : SolverEngine::wide;
  }
  switch (engine) {
    case SolverEngine::dense:
      if (n > kDenseMaxStates + 3) {
        throw std::invalid_argument("dense engine supports at most " +
                                    std::to_string(kDenseMaxStates + 3) + " states");
      }
      return solve_dense(dfa, lim);
    case SolverEngine::sparse:
      if (n > kSparseMaxStates) {
        throw std::invalid_argument("sparse engine supports at most 64 states");
      }
      return solve_sparse(dfa, lim);
    case SolverEngine::wide:
      return solve_wide(dfa, lim);
    case SolverEngine::automatic:
      break;
  }
  throw std::logic_error("unreachable engine choice");
}

RtResult brute_force_rt(const Dfa& dfa, std::uint64_t max_length) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  if (n > 64) {
    throw std::invalid_argument("word enumeration supports at most 64 states");
  }
  const std::uint64_t full =
      (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  std::uint64_t explored = 1;  // the empty word
  if (std::popcount(full) == 1) return found_result({}, explored);

  const auto tables = letter_tables(dfa);
  Word path;
  // All words of the target length, lexicographic, no pruning of repeated
  // subset images: this stays independent of the breadth-first solver.
  const auto dfs = [&](auto&& self, std::uint64_t mask, std::uint64_t remaining) -> bool {
    if (remaining == 0) {
      ++explored;
      return std::popcount(mask) == 1;
    }
    for (Letter l = 0; l < k; ++l) {
      path.push_back(l);
      if (self(self, image64(mask, tables[l]), remaining - 1)) return true;
      path.pop_back();
    }
    return false;
  };
  for (std::uint64_t length = 1; length <= max_length; ++length) {
    path.clear();
    if (dfs(dfs, full, length)) return found_result(path, explored);
  }
  return status_result(SolveStatus::not_found, explored);
}

std::optional<Word> greedy_upper_bound(const Dfa& dfa) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  if (n == 1) return Word{};

  const auto dist = detail::pair_merge_distances(dfa);
  const auto pair_dist = [&](State p, State q) {
    if (p == q) return std::uint32_t(0);
    if (p > q) std::swap(p, q);
    return dist[std::size_t(p) * n + q];
  };

  std::vector<char> member(n, 1);
  std::size_t size = n;
  Word out;

  while (size > 1) {
    std::vector<State> current;
    current.reserve(size);
    for (State q = 0; q < n; ++q) {
      if (member[q]) current.push_back(q);
    }
    std::uint32_t best = UINT32_MAX;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        best = std::min(best, pair_dist(current[i], current[j]));
      }
    }
    if (best == UINT32_MAX) return std::nullopt;

    // Extract the lexicographically least word of length `best` that merges
    // one of the minimum-distance pairs: walk the pair graph keeping every
    // pair still on a shortest path, taking the least viable letter.
    std::vector<std::pair<State, State>> active;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (pair_dist(current[i], current[j]) == best) {
          active.emplace_back(current[i], current[j]);
        }
      }
    }
    Word round;
    for (std::uint32_t remaining = best; remaining > 0; --remaining) {
      for (Letter l = 0; l < k; ++l) {
        std::vector<std::pair<State, State>> next;
        for (const auto& [p, q] : active) {
          State a = dfa.target(p, l);
          State b = dfa.target(q, l);
          if (a > b) std::swap(a, b);
          if (pair_dist(a, b) == remaining - 1) next.emplace_back(a, b);
        }
        if (next.empty()) continue;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        active = std::move(next);
        round.push_back(l);
        break;
      }
    }

    for (Letter l : round) {
      std::vector<char> next_member(n, 0);
      std::size_t next_size = 0;
      for (State q = 0; q < n; ++q) {
        if (!member[q]) continue;
        const State t = dfa.target(q, l);
        if (!next_member[t]) {
          next_member[t] = 1;
          ++next_size;
        }
      }
      member.swap(next_member);
      size = next_size;
      out.push_back(l);
    }
  }
  return out;
}

bool verify_reset_word(const Dfa& dfa, const Word& w) {
  return apply_word(dfa, StateSet::full(dfa.state_count()), w).count() == 1;
}

}  // namespace zerosync
