#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "zerosync/constructions.hpp"
#include "zerosync/dfa.hpp"

using namespace zerosync;

namespace {

// 0 is a sink; 1 collapses into it under b and loops under a.
Dfa two_state_sink() { return Dfa(2, 2, {0, 0, 1, 0}); }

// Two letters, both swapping the two states; never synchronizes.
Dfa two_state_flip() { return Dfa(2, 2, {1, 1, 0, 0}); }

}  // namespace

TEST_CASE("dfa validates its transition table") {
  CHECK_THROWS_AS(Dfa(0, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1, 2}), std::invalid_argument);
  CHECK_NOTHROW(Dfa(1, 1, {0}));
}

TEST_CASE("dfa letter names default and validate") {
  Dfa binary(2, 2, {0, 0, 1, 0});
  CHECK(binary.letter_names() == std::vector<std::string>{"a", "b"});

  Dfa wide(1, 3, {0, 0, 0});
  CHECK(wide.letter_names() == std::vector<std::string>{"a1", "a2", "a3"});

  Dfa named(2, 2, {0, 0, 1, 0}, {"x", "y"});
  CHECK(named.letter_index("x") == Letter{0});
  CHECK(named.letter_index("y") == Letter{1});
  CHECK(!named.letter_index("z").has_value());

  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1, 0}, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1, 0}, {"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1, 0}, {"a", "b c"}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1, 0}, {"a", ""}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 0, 1, 0}, {"a", "#"}), std::invalid_argument);
}

TEST_CASE("dfa equality compares table and names") {
  CHECK(two_state_sink() == two_state_sink());
  CHECK(two_state_sink() != two_state_flip());
  CHECK(Dfa(2, 2, {0, 0, 1, 0}) != Dfa(2, 2, {0, 0, 1, 0}, {"x", "y"}));
}

TEST_CASE("state set basics") {
  StateSet set(5);
  CHECK(set.count() == 0);
  set.add(0);
  set.add(3);
  set.add(3);
  CHECK(set.count() == 2);
  CHECK(set.contains(3));
  CHECK(!set.contains(1));
  set.remove(3);
  CHECK(set.count() == 1);
  CHECK(set.states() == std::vector<State>{0});

  StateSet full = StateSet::full(70);
  CHECK(full.count() == 70);
  CHECK(full.contains(69));
  full.remove(69);
  CHECK(full.count() == 69);

  CHECK(StateSet::of(5, {1, 2}).states() == std::vector<State>{1, 2});
}

TEST_CASE("step and word application") {
  Dfa dfa = cerny(4);
  CHECK(step(dfa, 0, 0) == 1);
  CHECK(step(dfa, 3, 0) == 0);
  CHECK(step(dfa, 0, 1) == 1);
  CHECK(step(dfa, 2, 1) == 2);

  StateSet full = StateSet::full(4);
  StateSet after_a = apply_letter(dfa, full, 0);
  CHECK(after_a.count() == 4);
  StateSet after_b = apply_letter(dfa, full, 1);
  CHECK(after_b.count() == 3);  // 0 and 1 merge

  Word w = word_from_string(dfa, "baaabaaab");
  CHECK(apply_word(dfa, full, w).count() == 1);
}

TEST_CASE("find_sink reports the unique all-letter fixed state") {
  CHECK(find_sink(swap_chain(4)) == State{0});
  CHECK(find_sink(a_series(8)) == State{0});
  CHECK(find_sink(martyugin(4)) == State{0});
  CHECK(find_sink(martyugin_body(4)) == State{3});

  std::string why;
  CHECK(!find_sink(cerny(4), &why).has_value());
  CHECK(why == "no state is fixed by every letter");

  // Two absorbing states: ambiguous, hence no sink.
  Dfa two_sinks(3, 2, {0, 0, 1, 1, 0, 0});
  CHECK(!find_sink(two_sinks, &why).has_value());
  CHECK(why.find("2 states") != std::string::npos);
}

TEST_CASE("letter order is defined exactly for full permutations") {
  CHECK(letter_order(cerny(5), 0) == 5);           // 5-cycle
  CHECK(!letter_order(cerny(5), 1).has_value());   // 0 -> 1 collapse
  CHECK(letter_order(a_series(5), 1) == 3);
  for (std::uint32_t n = 6; n <= 13; ++n) CHECK(letter_order(a_series(n), 1) == 6);
  CHECK(letter_order(martyugin_body(5), 0) == 4);  // one (m-1)-cycle
  CHECK(letter_order(Dfa(3, 1, {0, 1, 2}), 0) == 1);
}

TEST_CASE("almost permutation profile detection") {
  auto profile = almost_permutation_profile(a_series(8));
  REQUIRE(profile.has_value());
  CHECK(profile->sink == 0);
  CHECK(profile->pre_sink == 1);
  CHECK(profile->perm_letter == 1);
  CHECK(profile->collapse_letter == 0);

  auto body = almost_permutation_profile(martyugin_body(4));
  REQUIRE(body.has_value());
  CHECK(body->sink == 3);
  CHECK(body->pre_sink == 4);
  CHECK(body->perm_letter == 0);
  CHECK(body->collapse_letter == 1);

  std::string why;
  CHECK(!almost_permutation_profile(cerny(4), &why).has_value());
  CHECK(!why.empty());
  CHECK(!almost_permutation_profile(martyugin(4)).has_value());
  CHECK(!almost_permutation_profile(swap_chain(4)).has_value());
  CHECK(!almost_permutation_profile(two_state_flip()).has_value());
}

TEST_CASE("is_synchronizing agrees with known families") {
  CHECK(is_synchronizing(cerny(4)));
  CHECK(is_synchronizing(swap_chain(5)));
  CHECK(is_synchronizing(a_series(9)));
  CHECK(is_synchronizing(b_series(16)));
  CHECK(is_synchronizing(two_state_sink()));
  CHECK(!is_synchronizing(two_state_flip()));
  CHECK(!is_synchronizing(Dfa(3, 2, {0, 0, 1, 1, 0, 0})));
  CHECK(is_synchronizing(Dfa(1, 2, {0, 0})));
}

TEST_CASE("relabel permutes states consistently") {
  Dfa dfa = a_series(7);
  std::vector<State> identity{0, 1, 2, 3, 4, 5, 6};
  CHECK(relabel(dfa, identity) == dfa);

  std::vector<State> perm{0, 2, 1, 4, 3, 6, 5};
  Dfa relabeled = relabel(dfa, perm);
  CHECK(relabeled != dfa);
  CHECK(relabel(relabeled, perm) == dfa);  // perm is an involution

  for (State q = 0; q < 7; ++q)
    for (Letter l = 0; l < 2; ++l)
      CHECK(relabeled.target(perm[q], l) == perm[dfa.target(q, l)]);

  CHECK_THROWS_AS(relabel(dfa, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(dfa, {0, 0, 1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST_CASE("word round trip through letter names") {
  Dfa dfa = a_series(7);
  Word w = word_from_string(dfa, "abba");
  CHECK(w == Word{0, 1, 1, 0});
  CHECK(word_to_string(dfa, w) == "abba");
  CHECK(word_from_string(dfa, "").empty());
  CHECK(word_to_string(dfa, {}).empty());
  CHECK_THROWS_AS(word_from_string(dfa, "abc"), std::invalid_argument);

  // Multi-character letter names switch to whitespace-separated tokens.
  Dfa chain = swap_chain(4);
  Word cw = word_from_string(chain, "a1 a3 a2");
  CHECK(cw == Word{0, 2, 1});
  CHECK(word_to_string(chain, cw) == "a1 a3 a2");
  CHECK_THROWS_AS(word_from_string(chain, "a1 a9"), std::invalid_argument);
}
