#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "zerosync/dfa.hpp"

namespace zerosync {

/// Parameters of a tail extension; see tail_append().
struct TailSpec {
  std::uint32_t k;     // number of appended tail states
  State r;             // re-entry state for the non-walking letter
  Letter perm_letter;  // the letter that walks the tail
  bool operator==(const TailSpec&) const = default;
};

/// Classical n-state family with a cyclic letter and a single reset edge;
/// reset threshold (n - 1)^2. Letter a steps the cycle i -> i + 1 (mod n),
/// letter b maps 0 -> 1 and fixes everything else. Requires n >= 2.
Dfa cerny(std::uint32_t n);

/// n states, n - 1 letters, reset threshold n(n-1)/2: letter a1 maps 1 -> 0;
/// letter ai (i >= 2) swaps states i-1 and i; everything else is fixed, so
/// state 0 is the sink. Requires n >= 2.
Dfa swap_chain(std::uint32_t n);

/// The (m+1)-state almost-permutation core of the martyugin family: sink at
/// m-1, pre-sink at m, letter a permutes all states (one (m-1)-cycle plus two
/// fixed points), letter b collapses m to the sink and permutes the rest.
/// Requires m >= 4.
Dfa martyugin_body(std::uint32_t m);

/// Binary 2m-state sink family with reset threshold
/// ceil((n^2 + 6n - 16) / 4) at n = 2m. Requires m >= 4.
Dfa martyugin(std::uint32_t m);

/// Binary n-state almost-permutation family with sink 0 and pre-sink 1:
/// letter b permutes every state with order 6 (for n >= 6), letter a
/// collapses 1 to the sink and permutes the rest. Reset threshold 4n - 13
/// for n in {7, 9} and n >= 10, and 20 at n = 8. Requires n >= 5.
Dfa a_series(std::uint32_t n);

/// Appends a k-state tail t_0..t_{k-1} to a binary sink automaton. The
/// walking letter sends the old sink to t_{k-1} and steps t_i -> t_{i-1};
/// the other letter sends the old sink and every t_i (i >= 1) back to r.
/// Both letters fix t_0, the new sink. k = 0 returns the base unchanged.
/// Requires: binary base with a sink, perm_letter a permutation of all
/// states, r a non-sink state.
Dfa tail_append(const Dfa& base, const TailSpec& tail);

/// Reset threshold of a tail extension predicted from the base threshold:
/// rt + n * k, valid when k is a multiple of the walking letter's order.
std::uint64_t predict_tailed_rt(std::uint64_t rt_base, std::uint64_t n,
                                std::uint64_t k);

/// N-state tail extension of the a-series attaining reset threshold
/// N^2/4 + 2N - 9: base a_series((N+4)/2) with a tail of length n - 4 walked
/// by letter b at re-entry state 1. Requires N >= 16 and N = 4 (mod 12).
Dfa b_series(std::uint32_t N);

/// A known shortest reset word for a_series(n), of length 4n - 13.
/// Defined for odd n >= 7 and even n >= 10 (there is no length-(4n-13)
/// reset word at n = 8).
Word a_series_reset_word(std::uint32_t n);

enum class Family {
  cerny,
  swap_chain,
  martyugin,
  martyugin_body,
  a_series,
  b_series,
};

/// A family member identified by its state count, the uniform external
/// parameter: martyugin(m) has 2m states, martyugin_body(m) has m + 1.
struct FamilyParams {
  Family family;
  std::uint32_t states;
  bool operator==(const FamilyParams&) const = default;
};

Dfa build_family(const FamilyParams& params);
std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

}  // namespace zerosync
