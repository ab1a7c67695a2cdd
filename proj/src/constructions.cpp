#include "zerosync/constructions.hpp"

#include <stdexcept>
#include <string>

namespace zerosync {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Dfa cerny(std::uint32_t n) {
  require(n >= 2, "cerny needs n >= 2, got " + std::to_string(n));
  std::vector<State> delta(std::size_t(n) * 2);
  for (State q = 0; q < n; ++q) {
    delta[q * 2 + 0] = (q + 1) % n;  // a: cycle
    delta[q * 2 + 1] = q;            // b: identity ...
  }
  delta[0 * 2 + 1] = 1;  // ... except 0 -> 1
  return Dfa(n, 2, std::move(delta));
}

Dfa swap_chain(std::uint32_t n) {
  require(n >= 2, "swap-chain needs n >= 2, got " + std::to_string(n));
  const std::uint32_t k = n - 1;
  std::vector<State> delta(std::size_t(n) * k);
  for (State q = 0; q < n; ++q) {
    for (Letter l = 0; l < k; ++l) delta[std::size_t(q) * k + l] = q;
  }
  delta[std::size_t(1) * k + 0] = 0;  // first letter drains 1 into the sink
  for (Letter l = 1; l < k; ++l) {    // letter l swaps states l and l + 1
    delta[std::size_t(l) * k + l] = l + 1;
    delta[std::size_t(l + 1) * k + l] = l;
  }
  return Dfa(n, k, std::move(delta));
}

Dfa martyugin_body(std::uint32_t m) {
  require(m >= 4, "martyugin-body needs m >= 4, got " + std::to_string(m));
  const std::uint32_t n = m + 1;  // sink at m - 1, pre-sink at m
  std::vector<State> delta(std::size_t(n) * 2);
  const auto set = [&](State q, Letter l, State t) { delta[q * 2 + l] = t; };

  // a: one (m-1)-cycle m -> m-3 -> ... -> 1 -> 0 -> m, fixing m-2 and the sink.
  set(m - 1, 0, m - 1);
  set(m - 2, 0, m - 2);
  set(m, 0, m - 3);
  set(0, 0, m);
  for (State j = 1; j + 3 <= m; ++j) set(j, 0, j - 1);

  // b: collapses the pre-sink and permutes the rest in one (m-1)-cycle
  // 0 -> m-2 -> 1 -> 2 -> ... -> m-3 -> 0.
  set(m - 1, 1, m - 1);
  set(m, 1, m - 1);
  set(0, 1, m - 2);
  set(m - 3, 1, 0);
  set(m - 2, 1, 1);
  for (State j = 1; j + 4 <= m; ++j) set(j, 1, j + 1);

  return Dfa(n, 2, std::move(delta));
}

Dfa martyugin(std::uint32_t m) {
  require(m >= 4, "martyugin needs m >= 4, got " + std::to_string(m));
  const std::uint32_t n = 2 * m;
  std::vector<State> delta(std::size_t(n) * 2);
  const auto set = [&](State q, Letter l, State t) { delta[q * 2 + l] = t; };

  set(0, 0, 0);
  set(0, 1, 0);
  for (State i = 1; i <= m - 1; ++i) {
    set(i, 0, i - 1);
    set(i, 1, m);
  }
  set(m, 0, 2 * m - 2);
  set(m, 1, m - 1);
  for (State i = m + 1; i <= 2 * m - 2; ++i) set(i, 0, i - 1);
  set(2 * m - 1, 0, 2 * m - 1);
  set(m + 1, 1, 2 * m - 1);
  for (State i = m + 2; i <= 2 * m - 3; ++i) set(i, 1, i + 1);
  set(2 * m - 2, 1, m + 1);
  set(2 * m - 1, 1, m + 2);

  return Dfa(n, 2, std::move(delta));
}

Dfa a_series(std::uint32_t n) {
  require(n >= 5, "a-series needs n >= 5, got " + std::to_string(n));
  std::vector<State> delta(std::size_t(n) * 2);
  const auto set = [&](State q, Letter l, State t) { delta[q * 2 + l] = t; };

  // Fixed head: sink 0, pre-sink 1; b cycles {1, 3, 2}, a cycles {2, 4, 3}.
  set(0, 0, 0);
  set(0, 1, 0);
  set(1, 0, 0);
  set(1, 1, 3);
  set(2, 0, 4);
  set(2, 1, 1);
  set(3, 0, 2);
  set(3, 1, 2);
  set(4, 0, 3);

  // Tail zig-zag: a pairs odd j with j + 1, b pairs even j with j + 1, and
  // whichever letter would step past the last state fixes it instead.
  for (State j = 5; j < n; ++j) {
    if (j % 2 == 1) {
      set(j, 0, j == n - 1 ? j : j + 1);
    } else {
      set(j, 0, j - 1);
    }
  }
  for (State j = 4; j < n; ++j) {
    if (j % 2 == 0) {
      set(j, 1, j == n - 1 ? j : j + 1);
    } else {
      set(j, 1, j - 1);
    }
  }
  return Dfa(n, 2, std::move(delta));
}

Dfa tail_append(const Dfa& base, const TailSpec& tail) {
  require(base.letter_count() == 2, "tail extension needs a binary base automaton");
  std::string why;
  const auto sink = find_sink(base, &why);
  require(sink.has_value(), "tail extension needs a base with a sink: " + why);
  require(tail.perm_letter < 2, "perm_letter out of range for a binary automaton");
  require(is_permutation_on(base, tail.perm_letter,
                            StateSet::full(base.state_count())),
          "the tail-walking letter must permute all base states");
  require(tail.r < base.state_count(),
          "re-entry state " + std::to_string(tail.r) + " out of range");
  require(tail.r != *sink, "re-entry state must not be the sink");
  if (tail.k == 0) return base;

  const std::uint32_t n = base.state_count();
  const std::uint32_t total = n + tail.k;
  const Letter walk = tail.perm_letter;
  const Letter other = 1 - walk;
  const auto t = [&](std::uint32_t i) { return State(n + i); };  // tail state t_i

  std::vector<State> delta(std::size_t(total) * 2);
  const auto set = [&](State q, Letter l, State target) { delta[q * 2 + l] = target; };
  for (State q = 0; q < n; ++q) {
    set(q, 0, base.target(q, 0));
    set(q, 1, base.target(q, 1));
  }
  set(*sink, walk, t(tail.k - 1));  // old sink feeds the top of the tail
  set(*sink, other, tail.r);
  set(t(0), walk, t(0));  // t_0 is the new sink
  set(t(0), other, t(0));
  for (std::uint32_t i = 1; i < tail.k; ++i) {
    set(t(i), walk, t(i - 1));
    set(t(i), other, tail.r);
  }
  return Dfa(total, 2, std::move(delta), base.letter_names());
}

std::uint64_t predict_tailed_rt(std::uint64_t rt_base, std::uint64_t n,
                                std::uint64_t k) {
  return rt_base + n * k;
}

Dfa b_series(std::uint32_t N) {
  require(N >= 16 && N % 12 == 4,
          "b-series needs N >= 16 with N = 4 (mod 12), got " + std::to_string(N));
  const std::uint32_t n = (N + 4) / 2;
  const std::uint32_t k = n - 4;  // a multiple of 6, the order of letter b
  return tail_append(a_series(n), TailSpec{k, 1, 1});
}

Word a_series_reset_word(std::uint32_t n) {
  const bool odd_case = n >= 7 && n % 2 == 1;
  const bool even_case = n >= 10 && n % 2 == 0;
  require(odd_case || even_case,
          "no length-(4n-13) reset word is defined for n = " + std::to_string(n));
  const auto append = [](Word& w, std::string_view text, std::uint32_t times = 1) {
    for (std::uint32_t i = 0; i < times; ++i) {
      for (char c : text) w.push_back(c == 'a' ? 0 : 1);
    }
  };
  Word w;
  append(w, "aba");
  if (odd_case) {
    append(w, "abaabbab", (n - 5) / 2);
  } else {
    append(w, "abaabbab", (n - 8) / 2);
    append(w, "abbb");
    append(w, "abaabbab");
  }
  append(w, "aaba");
  return w;
}

Dfa build_family(const FamilyParams& params) {
  const std::uint32_t n = params.states;
  switch (params.family) {
    case Family::cerny:
      return cerny(n);
    case Family::swap_chain:
      return swap_chain(n);
    case Family::martyugin:
      require(n >= 8 && n % 2 == 0,
              "martyugin needs an even state count >= 8, got " + std::to_string(n));
      return martyugin(n / 2);
    case Family::martyugin_body:
      require(n >= 5, "martyugin-body needs at least 5 states, got " + std::to_string(n));
      return martyugin_body(n - 1);
    case Family::a_series:
      return a_series(n);
    case Family::b_series:
      return b_series(n);
  }
  throw std::invalid_argument("unknown family");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::cerny:
      return "cerny";
    case Family::swap_chain:
      return "swap-chain";
    case Family::martyugin:
      return "martyugin";
    case Family::martyugin_body:
      return "martyugin-body";
    case Family::a_series:
      return "a-series";
    case Family::b_series:
      return "b-series";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::cerny, Family::swap_chain, Family::martyugin,
                   Family::martyugin_body, Family::a_series, Family::b_series}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

}  // namespace zerosync
