#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "zerosync/cli.hpp"
#include "zerosync/constructions.hpp"
#include "zerosync/dfa.hpp"
#include "zerosync/solver.hpp"
#include "zerosync/textio.hpp"

using namespace zerosync;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun result;
  result.exit_code = run_command(args, in, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("gen pipes into rt with witness") {
  auto gen = run({"gen", "--family", "cerny", "--n", "4"});
  REQUIRE(gen.exit_code == 0);
  CHECK(gen.out == serialize_automaton(cerny(4)));

  auto rt = run({"rt", "-", "--witness"}, gen.out);
  CHECK(rt.exit_code == 0);
  CHECK(rt.out == "9\nbaaabaaab\n");
}

TEST_CASE("the flagship member prints its threshold and witness") {
  auto gen = run({"gen", "--family", "b-series", "--n", "16"});
  REQUIRE(gen.exit_code == 0);
  auto rt = run({"rt", "-", "--witness"}, gen.out);
  REQUIRE(rt.exit_code == 0);
  auto lines = lines_of(rt.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "87");
  CHECK(lines[1].size() == 87);
  CHECK(verify_reset_word(b_series(16), word_from_string(b_series(16), lines[1])));
}

TEST_CASE("rt algorithms agree on the small bundled automata") {
  std::vector<std::string> members;
  for (std::uint32_t n = 3; n <= 5; ++n) {
    members.push_back(serialize_automaton(cerny(n)));
    members.push_back(serialize_automaton(swap_chain(n)));
  }
  members.push_back(serialize_automaton(a_series(5)));
  members.push_back(serialize_automaton(martyugin_body(4)));

  for (const auto& text : members) {
    auto bfs = run({"rt", "-", "--algo", "bfs", "--witness"}, text);
    auto brute = run({"rt", "-", "--algo", "brute", "--witness"}, text);
    REQUIRE(bfs.exit_code == 0);
    REQUIRE(brute.exit_code == 0);
    CHECK(bfs.out == brute.out);
  }
}

TEST_CASE("rt greedy prints a valid upper bound") {
  auto result = run({"rt", "-", "--algo", "greedy", "--witness"},
                    serialize_automaton(cerny(4)));
  REQUIRE(result.exit_code == 0);
  auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 2);
  CHECK(std::stoul(lines[0]) >= 9);
  CHECK(lines[1].size() == std::stoul(lines[0]));
  CHECK(verify_reset_word(cerny(4), word_from_string(cerny(4), lines[1])));
}

TEST_CASE("rt reports analysis failures with exit 1") {
  auto flip = run({"rt", "-"}, "dfa 2 2\n1 1\n0 0\n");
  CHECK(flip.exit_code == 1);
  CHECK(flip.err.find("not synchronizing") != std::string::npos);
  CHECK(flip.out.empty());

  auto capped = run({"rt", "-", "--max-subsets", "2"},
                    serialize_automaton(cerny(4)));
  CHECK(capped.exit_code == 1);
  CHECK(capped.err.find("limit exceeded") != std::string::npos);

  auto brute_capped = run({"rt", "-", "--algo", "brute", "--max-length", "3"},
                          serialize_automaton(cerny(4)));
  CHECK(brute_capped.exit_code == 1);
}

TEST_CASE("rt rejects usage errors with exit 2") {
  CHECK(run({"rt", "-", "--algo", "magic"}, "dfa 1 1\n0\n").exit_code == 2);
  CHECK(run({"rt", "/nonexistent/file"}).exit_code == 2);
  CHECK(run({"rt", "-"}, "dfa 2 2\n0 0\n5 0\n").exit_code == 2);
  CHECK(run({"rt"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("check prints the full analysis") {
  auto good = run({"check", "-"}, serialize_automaton(a_series(8)));
  CHECK(good.exit_code == 0);
  CHECK(good.out ==
        "states: 8\n"
        "letters: a b\n"
        "sink: 0\n"
        "synchronizing: yes\n"
        "profile: pre-sink 1, permutation letter b, collapse letter a\n"
        "order(a): -\n"
        "order(b): 6\n");

  auto bad = run({"check", "-"}, serialize_automaton(cerny(4)));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("sink: none") != std::string::npos);
  CHECK(bad.out.find("profile: none") != std::string::npos);
  CHECK(bad.out.find("synchronizing: yes") != std::string::npos);
}

TEST_CASE("tail builds extensions, inferring profile defaults") {
  auto base = run({"gen", "--family", "a-series", "--n", "7"});
  auto tailed = run({"tail", "-", "--k", "6"}, base.out);
  REQUIRE(tailed.exit_code == 0);
  CHECK(tailed.out == serialize_automaton(tail_append(a_series(7), {6, 1, 1})));

  auto rt = run({"rt", "-"}, tailed.out);
  CHECK(rt.out == "57\n");

  auto explicit_args = run(
      {"tail", "-", "--k", "6", "--r", "1", "--perm-letter", "b"}, base.out);
  CHECK(explicit_args.out == tailed.out);

  auto by_index = run(
      {"tail", "-", "--k", "6", "--r", "1", "--perm-letter", "1"}, base.out);
  CHECK(by_index.out == tailed.out);

  auto no_profile = run({"tail", "-", "--k", "2"}, serialize_automaton(cerny(4)));
  CHECK(no_profile.exit_code == 2);
  CHECK(no_profile.err.find("--r and --perm-letter") != std::string::npos);

  auto no_sink = run({"tail", "-", "--k", "2", "--r", "1", "--perm-letter", "a"},
                     serialize_automaton(cerny(4)));
  CHECK(no_sink.exit_code == 2);
}

TEST_CASE("verify emits the report table with footer lines") {
  auto result = run({"verify", "--max-n", "10"});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("cerny(3)") != std::string::npos);
  CHECK(result.out.find("b-series(16)") != std::string::npos);
  CHECK(result.out.find("bound-only") != std::string::npos);
  CHECK(result.out.find("tail lemma a-series(7) k=6: 15 + 7*6 = 57, tailed rt 57 (holds)") !=
        std::string::npos);
  CHECK(result.out.find("tail lemma martyugin-body(4) k=3: 9 + 5*3 = 24, tailed rt 24 (holds)") !=
        std::string::npos);
  CHECK(result.out.find("bounds N=16: martyugin 84, vorel conjecture 85, b-series 87") !=
        std::string::npos);
  CHECK(result.out.find("bounds N=28: martyugin 234, vorel conjecture 235, b-series 243") !=
        std::string::npos);
}

TEST_CASE("verify csv mode prints machine-readable rows") {
  auto result = run({"verify", "--max-n", "10", "--csv", "-"});
  REQUIRE(result.exit_code == 0);
  auto lines = lines_of(result.out);
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "family,states,rt_exact,rt_lower,rt_formula,status");
  CHECK(result.out.find("a-series(7),7,15,15,15,match") != std::string::npos);
  CHECK(result.out.find("a-series(8),8,20,19,20,match") != std::string::npos);
  CHECK(result.out.find("a-series(9),9,23,23,23,match") != std::string::npos);
  CHECK(result.out.find("a-series(10),10,27,27,27,match") != std::string::npos);
  CHECK(result.out.find("tail lemma") == std::string::npos);
}

TEST_CASE("search emits one json line per finding") {
  auto result = run({"search", "--n", "5", "--min-rt", "9"});
  REQUIRE(result.exit_code == 0);
  auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        R"({"n":5,"rt":9,"witness":"abaabbaba","table":[[0,0],[0,2],[3,3],[4,1],[2,4]]})");
  CHECK(result.err.find("findings") != std::string::npos);

  auto empty = run({"search", "--n", "5", "--min-rt", "11"});
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.empty());

  auto invalid = run({"search", "--n", "9", "--min-rt", "1"});
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.err.find("random") != std::string::npos);
}

TEST_CASE("dot subcommand renders graphviz") {
  auto result = run({"dot", "-"}, serialize_automaton(a_series(8)));
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("digraph") == 0);
  CHECK(result.out.find("doublecircle") != std::string::npos);
}

TEST_CASE("gen validates the family name and parameters") {
  auto unknown = run({"gen", "--family", "unknown", "--n", "5"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("cerny") != std::string::npos);

  CHECK(run({"gen", "--family", "martyugin", "--n", "9"}).exit_code == 2);
  CHECK(run({"gen", "--family", "cerny", "--n", "1"}).exit_code == 2);

  auto all = {"cerny", "swap-chain", "martyugin", "martyugin-body",
              "a-series", "b-series"};
  std::vector<std::uint32_t> sizes{5, 5, 8, 5, 7, 16};
  std::size_t index = 0;
  for (const char* name : all) {
    auto result =
        run({"gen", "--family", name, "--n", std::to_string(sizes[index++])});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("dfa ") == 0);
  }
}

TEST_CASE("help is exit 0") {
  auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(!help.out.empty());
}
