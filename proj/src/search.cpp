#include "zerosync/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <random>
#include <stdexcept>
#include <thread>

namespace zerosync {

namespace {

constexpr std::uint32_t kExhaustiveMaxStates = 8;

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic unranking: permutation number `rank` of the sorted pool.
std::vector<State> unrank_permutation(std::uint64_t rank, std::vector<State> pool) {
  std::vector<State> out;
  out.reserve(pool.size());
  std::uint64_t radix = factorial(std::uint32_t(pool.size()));
  while (!pool.empty()) {
    radix /= pool.size();
    const std::size_t pick = std::size_t(rank / radix);
    rank %= radix;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + std::ptrdiff_t(pick));
  }
  return out;
}

// The (r, alpha, beta) triples indexed as ((r-1) * A + a_idx) * B + b_idx:
// r is the pre-sink, alpha permutes the states outside {0, r} under letter a,
// beta permutes the non-sink states under letter b.
struct CandidateSpace {
  std::uint32_t n;
  std::uint64_t alpha_count;  // (n-2)!
  std::uint64_t beta_count;   // (n-1)!
  std::uint64_t total;        // (n-1) * alpha_count * beta_count

  explicit CandidateSpace(std::uint32_t states)
      : n(states),
        alpha_count(factorial(states - 2)),
        beta_count(factorial(states - 1)),
        total((states - 1) * alpha_count * beta_count) {}

  Dfa build(std::uint64_t index) const {
    const std::uint64_t b_idx = index % beta_count;
    const std::uint64_t a_idx = (index / beta_count) % alpha_count;
    const State r = State(1 + index / (beta_count * alpha_count));
    return assemble(r, a_idx, b_idx);
  }

  Dfa assemble(State r, std::uint64_t a_idx, std::uint64_t b_idx) const {
    std::vector<State> alpha_pool;
    alpha_pool.reserve(n - 2);
    for (State q = 1; q < n; ++q) {
      if (q != r) alpha_pool.push_back(q);
    }
    std::vector<State> beta_pool;
    beta_pool.reserve(n - 1);
    for (State q = 1; q < n; ++q) beta_pool.push_back(q);

    const auto alpha = unrank_permutation(a_idx, alpha_pool);
    const auto beta = unrank_permutation(b_idx, beta_pool);

    std::vector<State> delta(std::size_t(n) * 2);
    delta[0] = 0;
    delta[1] = 0;
    delta[std::size_t(r) * 2 + 0] = 0;  // the collapse edge
    for (std::size_t i = 0; i < alpha_pool.size(); ++i) {
      delta[std::size_t(alpha_pool[i]) * 2 + 0] = alpha[i];
    }
    for (std::size_t i = 0; i < beta_pool.size(); ++i) {
      delta[std::size_t(beta_pool[i]) * 2 + 1] = beta[i];
    }
    return Dfa(n, 2, std::move(delta));
  }
};

// Sink automata synchronize iff every state reaches the sink.
bool sink_reachable_from_all(const Dfa& dfa, State sink) {
  const std::uint32_t n = dfa.state_count();
  std::vector<std::vector<State>> rev(n);
  for (State q = 0; q < n; ++q) {
    for (Letter l = 0; l < dfa.letter_count(); ++l) rev[dfa.target(q, l)].push_back(q);
  }
  std::vector<char> seen(n, 0);
  std::queue<State> queue;
  queue.push(sink);
  seen[sink] = 1;
  std::uint32_t reached = 1;
  while (!queue.empty()) {
    const State cur = queue.front();
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

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Exact uniform draw from [0, bound) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Dfa random_candidate(const CandidateSpace& space, std::uint64_t seed,
                     std::uint64_t draw) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(draw)));
  const State r = State(1 + bounded(rng, space.n - 1));
  const std::uint64_t a_idx =
      space.alpha_count > 1 ? bounded(rng, space.alpha_count) : 0;
  const std::uint64_t b_idx =
      space.beta_count > 1 ? bounded(rng, space.beta_count) : 0;
  return space.assemble(r, a_idx, b_idx);
}

void validate(const SearchConfig& config) {
  if (config.n < 3) {
    throw std::invalid_argument("search needs n >= 3, got " +
                                std::to_string(config.n));
  }
  if (config.mode == SearchMode::exhaustive && config.n > kExhaustiveMaxStates) {
    throw std::invalid_argument(
        "exhaustive search supports n <= " + std::to_string(kExhaustiveMaxStates) +
        "; use random mode for n = " + std::to_string(config.n));
  }
}

}  // namespace

void enumerate_candidates(const SearchConfig& config,
                          const std::function<void(const Dfa&)>& yield) {
  validate(config);
  const CandidateSpace space(config.n);
  if (config.mode == SearchMode::exhaustive) {
    for (std::uint64_t index = 0; index < space.total; ++index) {
      Dfa candidate = space.build(index);
      if (sink_reachable_from_all(candidate, 0)) yield(candidate);
    }
  } else {
    for (std::uint64_t draw = 0; draw < config.samples; ++draw) {
      Dfa candidate = random_candidate(space, config.seed, draw);
      if (sink_reachable_from_all(candidate, 0)) yield(candidate);
    }
  }
}

SearchResult search_extremal(const SearchConfig& config) {
  validate(config);
  const CandidateSpace space(config.n);
  const std::uint64_t work_items =
      config.mode == SearchMode::exhaustive ? space.total : config.samples;
  const std::uint32_t workers =
      std::uint32_t(std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                                   config.worker_count, work_items)));

  struct RawFinding {
    std::uint64_t rt;
    Word witness;
    std::vector<State> table;
  };
  std::vector<RawFinding> raw;
  SearchStats stats;
  stats.candidates = work_items;
  std::mutex merge_mutex;

  const auto run_shard = [&](std::uint32_t shard) {
    std::vector<RawFinding> local;
    std::uint64_t local_sync = 0;
    std::uint64_t local_skipped = 0;
    for (std::uint64_t item = shard; item < work_items; item += workers) {
      Dfa candidate = config.mode == SearchMode::exhaustive
                          ? space.build(item)
                          : random_candidate(space, config.seed, item);
      if (!sink_reachable_from_all(candidate, 0)) continue;
      ++local_sync;
      const auto result = exact_reset_threshold(candidate, config.limits);
      if (result.status != SolveStatus::found) {
        ++local_skipped;
        continue;
      }
      if (result.threshold >= config.min_rt) {
        local.push_back({result.threshold, result.witness, candidate.table()});
      }
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    stats.synchronizing += local_sync;
    stats.skipped_limits += local_skipped;
    for (auto& f : local) raw.push_back(std::move(f));
  };

  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) threads.emplace_back(run_shard, w);
    for (auto& t : threads) t.join();
  }

  // Deduplicate up to sink-fixing relabelings. Every representative of a
  // class has the same threshold and the same least witness (reset words are
  // unchanged by relabeling), so any representative may speak for the class.
  std::map<std::vector<State>, RawFinding> classes;
  for (auto& f : raw) {
    Dfa canonical = canonical_form(Dfa(config.n, 2, f.table));
    classes.try_emplace(canonical.table(),
                        RawFinding{f.rt, std::move(f.witness), canonical.table()});
  }

  SearchResult result;
  result.stats = stats;
  result.findings.reserve(classes.size());
  for (auto& [table, f] : classes) {
    result.findings.push_back(Finding{Dfa(config.n, 2, table), f.rt, f.witness});
  }
  std::sort(result.findings.begin(), result.findings.end(),
            [](const Finding& x, const Finding& y) {
              if (x.rt != y.rt) return x.rt > y.rt;
              return x.dfa.table() < y.dfa.table();
            });
  return result;
}

Dfa canonical_form(const Dfa& dfa) {
  const std::uint32_t n = dfa.state_count();
  const std::uint32_t k = dfa.letter_count();
  std::vector<State> perm(n), best_perm(n);
  perm[0] = 0;
  std::vector<State> tail;
  for (State q = 1; q < n; ++q) tail.push_back(q);

  std::vector<State> best;
  std::vector<State> encoding(std::size_t(n) * k);
  do {
    for (State q = 1; q < n; ++q) perm[q] = tail[q - 1];
    for (State q = 0; q < n; ++q) {
      for (Letter l = 0; l < k; ++l) {
        encoding[std::size_t(perm[q]) * k + l] = perm[dfa.target(q, l)];
      }
    }
    if (best.empty() || encoding < best) {
      best = encoding;
      best_perm = perm;
    }
  } while (std::next_permutation(tail.begin(), tail.end()));

  return relabel(dfa, best_perm);
}

}  // namespace zerosync
