#include "zerosync/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerosync/constructions.hpp"
#include "zerosync/dfa.hpp"
#include "zerosync/report.hpp"
#include "zerosync/search.hpp"
#include "zerosync/solver.hpp"
#include "zerosync/textio.hpp"

namespace zerosync {
namespace {

Dfa read_automaton(const std::string& path, std::istream& in) {
  if (path == "-") return parse_automaton(in);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open input file: " + path);
  return parse_automaton(file);
}

void write_text(const std::string& path, std::ostream& out, const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  file << text;
}

Letter parse_letter(const Dfa& dfa, const std::string& token) {
  if (auto index = dfa.letter_index(token)) return *index;
  Letter value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc() && ptr == token.data() + token.size() &&
      value < dfa.letter_count())
    return value;
  throw std::invalid_argument("unknown letter '" + token + "'");
}

struct GenArgs {
  std::string family;
  std::uint32_t n = 0;
  std::string output = "-";
};

struct RtArgs {
  std::string file;
  std::string algo = "bfs";
  bool witness = false;
  std::optional<std::uint64_t> max_subsets;
  std::optional<std::uint64_t> max_length;
};

struct CheckArgs {
  std::string file;
};

struct TailArgs {
  std::string file;
  std::uint32_t k = 0;
  std::optional<std::uint32_t> r;
  std::optional<std::string> perm_letter;
  std::string output = "-";
};

struct VerifyArgs {
  std::uint32_t max_n = 13;
  std::string csv;
  bool exact_tails = false;
};

struct SearchArgs {
  std::uint32_t n = 0;
  std::uint64_t min_rt = 0;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  std::uint32_t jobs = 1;
  std::string dump_dir;
};

struct DotArgs {
  std::string file;
  std::string output = "-";
};

int run_gen(const GenArgs& args, std::ostream& out) {
  auto family = family_from_name(args.family);
  if (!family)
    throw std::invalid_argument(
        "unknown family '" + args.family +
        "' (expected cerny, swap-chain, martyugin, martyugin-body, "
        "a-series, or b-series)");
  Dfa dfa = build_family({*family, args.n});
  write_text(args.output, out, serialize_automaton(dfa));
  return 0;
}

int run_rt(const RtArgs& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Dfa dfa = read_automaton(args.file, in);
  SolverLimits limits{args.max_subsets, args.max_length};

  RtResult result;
  if (args.algo == "bfs") {
    result = exact_reset_threshold(dfa, limits);
  } else if (args.algo == "brute") {
    std::uint64_t cap = args.max_length.value_or(
        std::uint64_t(dfa.state_count()) * dfa.state_count());
    result = brute_force_rt(dfa, cap);
  } else if (args.algo == "greedy") {
    auto word = greedy_upper_bound(dfa);
    if (!word) {
      err << "not synchronizing\n";
      return 1;
    }
    out << word->size() << '\n';
    if (args.witness) out << word_to_string(dfa, *word) << '\n';
    return 0;
  } else {
    throw std::invalid_argument("unknown algorithm '" + args.algo +
                                "' (expected bfs, brute, or greedy)");
  }

  switch (result.status) {
    case SolveStatus::found:
      out << result.threshold << '\n';
      if (args.witness) out << word_to_string(dfa, result.witness) << '\n';
      return 0;
    case SolveStatus::not_synchronizing:
      err << "not synchronizing\n";
      return 1;
    case SolveStatus::limit_exceeded:
      err << "limit exceeded after " << result.explored << " subsets\n";
      return 1;
    case SolveStatus::not_found:
      err << "no reset word within the length cap\n";
      return 1;
  }
  return 1;
}

int run_check(const CheckArgs& args, std::istream& in, std::ostream& out) {
  Dfa dfa = read_automaton(args.file, in);

  out << "states: " << dfa.state_count() << '\n';
  out << "letters:";
  for (const auto& name : dfa.letter_names()) out << ' ' << name;
  out << '\n';

  std::string why;
  auto sink = find_sink(dfa, &why);
  if (sink)
    out << "sink: " << *sink << '\n';
  else
    out << "sink: none (" << why << ")\n";

  bool synchronizing = is_synchronizing(dfa);
  out << "synchronizing: " << (synchronizing ? "yes" : "no") << '\n';

  auto profile = almost_permutation_profile(dfa, &why);
  if (profile)
    out << "profile: pre-sink " << profile->pre_sink << ", permutation letter "
        << dfa.letter_names()[profile->perm_letter] << ", collapse letter "
        << dfa.letter_names()[profile->collapse_letter] << '\n';
  else
    out << "profile: none (" << why << ")\n";

  for (Letter l = 0; l < dfa.letter_count(); ++l) {
    out << "order(" << dfa.letter_names()[l] << "): ";
    if (auto order = letter_order(dfa, l))
      out << *order << '\n';
    else
      out << "-\n";
  }

  return (sink && synchronizing && profile) ? 0 : 1;
}

int run_tail(const TailArgs& args, std::istream& in, std::ostream& out) {
  Dfa base = read_automaton(args.file, in);

  TailSpec tail_params{};
  tail_params.k = args.k;
  if (args.r && args.perm_letter) {
    tail_params.r = *args.r;
    tail_params.perm_letter = parse_letter(base, *args.perm_letter);
  } else {
    std::string why;
    auto profile = almost_permutation_profile(base, &why);
    if (!profile)
      throw std::invalid_argument(
          "--r and --perm-letter are required (cannot infer them: " + why + ")");
    tail_params.r = args.r.value_or(profile->pre_sink);
    tail_params.perm_letter = args.perm_letter ? parse_letter(base, *args.perm_letter)
                                        : profile->perm_letter;
  }

  Dfa tailed = tail_append(base, tail_params);
  write_text(args.output, out, serialize_automaton(tailed));
  return 0;
}

void print_lemma_line(std::ostream& out, const std::string& name,
                      const TailLemmaCheck& check) {
  out << "tail lemma " << name << ": " << check.rt_base << " + "
      << check.base_states << "*" << check.tail_length << " = "
      << check.predicted << ", tailed rt " << check.rt_tailed
      << (check.holds ? " (holds)" : " (FAILS)") << '\n';
}

void print_bounds_line(std::ostream& out, std::uint32_t N) {
  BoundTriple bounds = compare_bounds(N);
  out << "bounds N=" << N << ": martyugin " << bounds.martyugin
      << ", vorel conjecture " << bounds.vorel_conjecture << ", b-series "
      << bounds.b_series << '\n';
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  ReportOptions options;
  options.max_n = args.max_n;
  options.exact_tails = args.exact_tails;
  auto rows = threshold_report(options);

  bool failed = false;
  for (const auto& row : rows)
    if (row.status == RowStatus::mismatch) failed = true;

  const bool csv_to_stdout = args.csv == "-";
  if (csv_to_stdout) {
    write_report_csv(rows, out);
  } else {
    if (!args.csv.empty()) {
      std::ofstream file(args.csv);
      if (!file)
        throw std::invalid_argument("cannot open output file: " + args.csv);
      write_report_csv(rows, file);
    }
    write_report_table(rows, out);

    auto lemma_small = check_tail_lemma(a_series(7), 6);
    auto lemma_body = check_tail_lemma(martyugin_body(4), 3);
    print_lemma_line(out, "a-series(7) k=6", lemma_small);
    print_lemma_line(out, "martyugin-body(4) k=3", lemma_body);
    if (!lemma_small.holds || !lemma_body.holds) failed = true;

    print_bounds_line(out, 16);
    print_bounds_line(out, 28);
  }

  if (failed) {
    err << "verification failed\n";
    return 1;
  }
  return 0;
}

int run_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  config.n = args.n;
  config.min_rt = args.min_rt;
  if (args.mode == "exhaustive")
    config.mode = SearchMode::exhaustive;
  else if (args.mode == "random")
    config.mode = SearchMode::random;
  else
    throw std::invalid_argument("unknown mode '" + args.mode +
                                "' (expected exhaustive or random)");
  config.seed = args.seed;
  config.samples = args.samples;
  config.worker_count = std::max<std::uint32_t>(1, args.jobs);

  SearchResult result = search_extremal(config);

  for (const auto& finding : result.findings) {
    nlohmann::ordered_json line;
    line["n"] = finding.dfa.state_count();
    line["rt"] = finding.rt;
    line["witness"] = word_to_string(finding.dfa, finding.witness);
    auto rows = nlohmann::ordered_json::array();
    for (State q = 0; q < finding.dfa.state_count(); ++q) {
      auto row = nlohmann::ordered_json::array();
      for (Letter l = 0; l < finding.dfa.letter_count(); ++l)
        row.push_back(finding.dfa.target(q, l));
      rows.push_back(std::move(row));
    }
    line["table"] = std::move(rows);
    out << line.dump() << '\n';
  }

  if (!args.dump_dir.empty()) {
    std::filesystem::create_directories(args.dump_dir);
    for (std::size_t i = 0; i < result.findings.size(); ++i) {
      const auto& finding = result.findings[i];
      std::ostringstream name;
      name << "finding_" << std::setw(3) << std::setfill('0') << i << ".txt";
      std::ofstream file(std::filesystem::path(args.dump_dir) / name.str());
      if (!file)
        throw std::invalid_argument("cannot write into directory: " +
                                    args.dump_dir);
      file << "# rt " << finding.rt << '\n';
      file << "# witness " << word_to_string(finding.dfa, finding.witness)
           << '\n';
      file << serialize_automaton(finding.dfa);
    }
  }

  err << "search: " << result.stats.candidates << " candidates, "
      << result.stats.synchronizing << " synchronizing, "
      << result.stats.skipped_limits << " skipped, " << result.findings.size()
      << " findings\n";
  return 0;
}

int run_dot(const DotArgs& args, std::istream& in, std::ostream& out) {
  Dfa dfa = read_automaton(args.file, in);
  write_text(args.output, out, export_dot(dfa));
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for synchronizing automata with a sink state"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("--family", gen_args.family,
                  "cerny, swap-chain, martyugin, martyugin-body, a-series, "
                  "or b-series")
      ->required();
  gen->add_option("--n", gen_args.n, "Number of states")->required();
  gen->add_option("-o,--output", gen_args.output, "Output file ('-' = stdout)");

  RtArgs rt_args;
  auto* rt = app.add_subcommand("rt", "Compute the reset threshold");
  rt->add_option("file", rt_args.file, "Automaton file ('-' = stdin)")
      ->required();
  rt->add_option("--algo", rt_args.algo, "bfs, brute, or greedy");
  rt->add_flag("--witness", rt_args.witness, "Also print a shortest reset word");
  rt->add_option("--max-subsets", rt_args.max_subsets,
                 "Abort after visiting this many subsets");
  rt->add_option("--max-length", rt_args.max_length,
                 "Abort beyond this word length");

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Report sink, synchronization, profile, and letter orders");
  check->add_option("file", check_args.file, "Automaton file ('-' = stdin)")
      ->required();

  TailArgs tail_args;
  auto* tail = app.add_subcommand("tail", "Append a tail chain");
  tail->add_option("file", tail_args.file, "Base automaton file ('-' = stdin)")
      ->required();
  tail->add_option("--k", tail_args.k, "Tail length")->required();
  tail->add_option("--r", tail_args.r,
                   "Re-entry state (default: the pre-sink state)");
  tail->add_option("--perm-letter", tail_args.perm_letter,
                   "Walking letter (default: the permutation letter)");
  tail->add_option("-o,--output", tail_args.output, "Output file ('-' = stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check every bundled family against its closed form");
  verify->add_option("--max-n", verify_args.max_n,
                     "Largest a-series member (>= 7)");
  verify->add_option("--csv", verify_args.csv, "Write CSV ('-' = stdout)");
  verify->add_flag("--exact-tails", verify_args.exact_tails,
                   "Also exact-solve the 28-state tail extension");

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search", "Search almost-permutation sink automata for high thresholds");
  search->add_option("--n", search_args.n, "Number of states")->required();
  search->add_option("--min-rt", search_args.min_rt,
                     "Report findings with threshold >= this");
  search->add_option("--mode", search_args.mode, "exhaustive or random");
  search->add_option("--seed", search_args.seed, "Random-mode seed");
  search->add_option("--samples", search_args.samples, "Random-mode draws");
  search->add_option("--jobs", search_args.jobs, "Worker threads");
  search->add_option("--dump-dir", search_args.dump_dir,
                     "Also write each finding as a text file here");

  DotArgs dot_args;
  auto* dot = app.add_subcommand("dot", "Export Graphviz");
  dot->add_option("file", dot_args.file, "Automaton file ('-' = stdin)")
      ->required();
  dot->add_option("-o,--output", dot_args.output, "Output file ('-' = stdout)");

  try {
    // CLI11's vector overload consumes arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return run_gen(gen_args, out);
    if (*rt) return run_rt(rt_args, in, out, err);
    if (*check) return run_check(check_args, in, out);
    if (*tail) return run_tail(tail_args, in, out);
    if (*verify) return run_verify(verify_args, out, err);
    if (*search) return run_search(search_args, out, err);
    if (*dot) return run_dot(dot_args, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace zerosync
