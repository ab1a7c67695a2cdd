#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "zerosync/constructions.hpp"
#include "zerosync/dfa.hpp"
#include "zerosync/solver.hpp"

using namespace zerosync;

TEST_CASE("cerny tables and bounds") {
  CHECK(cerny(3) == Dfa(3, 2, {1, 1, 2, 1, 0, 2}));
  CHECK(cerny(2).state_count() == 2);
  CHECK(exact_reset_threshold(cerny(2)).threshold == 1);
  CHECK_THROWS_AS(cerny(1), std::invalid_argument);
}

TEST_CASE("swap chain structure") {
  Dfa chain = swap_chain(4);
  CHECK(chain.letter_count() == 3);
  CHECK(chain == Dfa(4, 3,
                     {0, 0, 0,   //
                      0, 2, 1,   //
                      2, 1, 3,   //
                      3, 3, 2},
                     {"a1", "a2", "a3"}));
  CHECK(find_sink(chain) == State{0});
  CHECK(exact_reset_threshold(swap_chain(2)).threshold == 1);
  CHECK_THROWS_AS(swap_chain(1), std::invalid_argument);
}

TEST_CASE("martyugin family at m=4, frozen table") {
  Dfa m4 = martyugin(4);
  CHECK(m4 == Dfa(8, 2,
                  {0, 0,   //
                   0, 4,   //
                   1, 4,   //
                   2, 4,   //
                   6, 3,   //
                   4, 7,   //
                   5, 5,   //
                   7, 6}));
  CHECK(find_sink(m4) == State{0});
  CHECK(!almost_permutation_profile(m4).has_value());
  CHECK_THROWS_AS(martyugin(3), std::invalid_argument);
}

TEST_CASE("martyugin body profile and frozen table") {
  Dfa body = martyugin_body(4);
  CHECK(body == Dfa(5, 2,
                    {4, 2,   //
                     0, 0,   //
                     2, 1,   //
                     3, 3,   //
                     1, 3}));
  auto profile = almost_permutation_profile(body);
  REQUIRE(profile.has_value());
  CHECK(profile->sink == 3);
  CHECK(profile->pre_sink == 4);
  CHECK(profile->perm_letter == 0);
  CHECK(profile->collapse_letter == 1);
  CHECK(is_synchronizing(body));
  CHECK(letter_order(martyugin_body(5), 0) == 4);
  CHECK(letter_order(martyugin_body(7), 0) == 6);
  CHECK_THROWS_AS(martyugin_body(3), std::invalid_argument);
}

TEST_CASE("a-series frozen tables at n=8 and n=9") {
  CHECK(a_series(8) == Dfa(8, 2,
                           {0, 0,   //
                            0, 3,   //
                            4, 1,   //
                            2, 2,   //
                            3, 5,   //
                            6, 4,   //
                            5, 7,   //
                            7, 6}));
  CHECK(a_series(9) == Dfa(9, 2,
                           {0, 0,   //
                            0, 3,   //
                            4, 1,   //
                            2, 2,   //
                            3, 5,   //
                            6, 4,   //
                            5, 7,   //
                            8, 6,   //
                            7, 8}));
  for (std::uint32_t n = 5; n <= 13; ++n) {
    auto profile = almost_permutation_profile(a_series(n));
    REQUIRE(profile.has_value());
    CHECK(profile->sink == 0);
    CHECK(profile->pre_sink == 1);
    CHECK(profile->perm_letter == 1);
    CHECK(profile->collapse_letter == 0);
    CHECK(is_synchronizing(a_series(n)));
  }
  CHECK_THROWS_AS(a_series(4), std::invalid_argument);
}

TEST_CASE("tail append matches its definition") {
  Dfa base = a_series(7);
  Dfa tailed = tail_append(base, {6, 1, 1});
  REQUIRE(tailed.state_count() == 13);
  CHECK(find_sink(tailed) == State{7});  // t_0

  // Base states other than the old sink keep their rows.
  for (State q = 1; q < 7; ++q)
    for (Letter l = 0; l < 2; ++l) CHECK(tailed.target(q, l) == base.target(q, l));

  // The walking letter: old sink enters at t_{k-1}, the tail steps down.
  CHECK(tailed.target(0, 1) == 12);
  for (State i = 1; i < 6; ++i) CHECK(tailed.target(7 + i, 1) == 7 + i - 1);
  CHECK(tailed.target(7, 1) == 7);

  // The other letter: old sink and the tail (except t_0) re-enter at r = 1.
  CHECK(tailed.target(0, 0) == 1);
  for (State i = 1; i < 6; ++i) CHECK(tailed.target(7 + i, 0) == 1);
  CHECK(tailed.target(7, 0) == 7);

  // The tail destroys the almost-permutation shape but keeps the sink.
  CHECK(!almost_permutation_profile(tailed).has_value());
  CHECK(is_synchronizing(tailed));

  CHECK(tail_append(base, {0, 1, 1}) == base);
}

TEST_CASE("tail append validates its inputs") {
  CHECK_THROWS_AS(tail_append(swap_chain(4), {2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tail_append(cerny(4), {2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tail_append(a_series(7), {6, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tail_append(a_series(7), {6, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tail_append(a_series(7), {6, 7, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tail_append(a_series(7), {6, 1, 2}), std::invalid_argument);
}

TEST_CASE("b-series members are tail extensions of the a-series") {
  CHECK(b_series(16) == tail_append(a_series(10), {6, 1, 1}));
  CHECK(b_series(28) == tail_append(a_series(16), {12, 1, 1}));
  CHECK(b_series(40).state_count() == 40);
  CHECK(find_sink(b_series(16)) == State{10});

  for (std::uint32_t bad : {4u, 12u, 15u, 17u, 20u, 24u})
    CHECK_THROWS_AS(b_series(bad), std::invalid_argument);
}

TEST_CASE("predict_tailed_rt is the tail rule") {
  CHECK(predict_tailed_rt(15, 7, 6) == 57);
  CHECK(predict_tailed_rt(23, 9, 6) == 77);
  CHECK(predict_tailed_rt(15, 7, 12) == 99);
  CHECK(predict_tailed_rt(51, 16, 12) == 243);
  CHECK(predict_tailed_rt(27, 10, 6) == 87);
  CHECK(predict_tailed_rt(9, 5, 3) == 24);
}

TEST_CASE("bundled reset words are exact") {
  for (std::uint32_t n : {7u, 9u, 10u, 11u, 12u, 13u}) {
    Word w = a_series_reset_word(n);
    CHECK(w.size() == 4 * std::size_t(n) - 13);
    CHECK(verify_reset_word(a_series(n), w));
    CHECK(exact_reset_threshold(a_series(n)).threshold == w.size());
  }
  CHECK_THROWS_AS(a_series_reset_word(5), std::invalid_argument);
  CHECK_THROWS_AS(a_series_reset_word(6), std::invalid_argument);
  CHECK_THROWS_AS(a_series_reset_word(8), std::invalid_argument);
}

TEST_CASE("family registry round trips") {
  for (Family family : {Family::cerny, Family::swap_chain, Family::martyugin,
                        Family::martyugin_body, Family::a_series, Family::b_series})
    CHECK(family_from_name(family_name(family)) == family);
  CHECK(!family_from_name("bogus").has_value());

  CHECK(build_family({Family::cerny, 4}) == cerny(4));
  CHECK(build_family({Family::swap_chain, 5}) == swap_chain(5));
  CHECK(build_family({Family::martyugin, 8}) == martyugin(4));
  CHECK(build_family({Family::martyugin_body, 5}) == martyugin_body(4));
  CHECK(build_family({Family::a_series, 7}) == a_series(7));
  CHECK(build_family({Family::b_series, 16}) == b_series(16));

  CHECK_THROWS_AS(build_family({Family::martyugin, 9}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({Family::martyugin, 6}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({Family::martyugin_body, 4}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({Family::cerny, 1}), std::invalid_argument);
}
