#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zerosync/constructions.hpp"
#include "zerosync/solver.hpp"

namespace zerosync {

/// Evidence from one tail-extension check: both thresholds computed by exact
/// search, next to the predicted value rt_base + n * k.
struct TailLemmaCheck {
  bool holds = false;
  std::uint64_t rt_base = 0;
  std::uint64_t rt_tailed = 0;
  std::uint64_t predicted = 0;
  std::uint32_t base_states = 0;
  std::uint32_t tail_length = 0;
  bool operator==(const TailLemmaCheck&) const = default;
};

/// Checks rt(tail_append(base, tail)) == rt(base) + n * k by exact search on
/// both sides. Preconditions (std::invalid_argument otherwise): base is a
/// synchronizing almost-permutation automaton; the tail is walked by the
/// profile's permutation letter and re-enters at the pre-sink; tail.k is a
/// multiple of the permutation letter's order. Throws std::runtime_error when
/// a solver limit is hit before either threshold is known.
TailLemmaCheck check_tail_lemma(const Dfa& base, const TailSpec& tail,
                                const SolverLimits& limits = {});

/// Convenience form: derives the re-entry state and walking letter from the
/// base profile, so only the tail length is needed.
TailLemmaCheck check_tail_lemma(const Dfa& base, std::uint32_t k,
                                const SolverLimits& limits = {});

enum class RowStatus { match, bound_only, mismatch, skipped };
std::string_view row_status_name(RowStatus status);

/// One verification row: a family member, its closed-form threshold, the best
/// proven lower bound, and the exact value when the search completed.
struct ReportRow {
  std::string family;  // e.g. "a-series(9)"
  std::uint32_t states = 0;
  std::optional<std::uint64_t> rt_exact;
  std::uint64_t rt_lower = 0;
  std::uint64_t rt_formula = 0;
  RowStatus status = RowStatus::skipped;
  bool operator==(const ReportRow&) const = default;
};

struct ReportOptions {
  std::uint32_t max_n = 13;  // largest a-series member, >= 7
  bool exact_tails = false;  // also exact-solve the 28-state tail extension
  SolverLimits limits;
};

/// Verifies every bundled family against its closed form: cerny and
/// swap-chain for n = 3..8, martyugin for m = 4..6, a-series for
/// n = 7..max_n, and the 16- and 28-state b-series members. The 28-state row
/// is bound-only by default, its value derived from the exact base threshold
/// through the tail rule; exact_tails solves it directly as well. Rows whose
/// search hits a limit degrade to skipped. Output order is fixed.
std::vector<ReportRow> threshold_report(const ReportOptions& options = {});

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out);
void write_report_table(const std::vector<ReportRow>& rows, std::ostream& out);

/// The three competing closed forms for the largest reset threshold of an
/// N-state binary sink automaton. Exact integers for even N; for odd N the
/// two quarter-formulas are rounded down. Requires N >= 8.
struct BoundTriple {
  std::int64_t martyugin;         // ceil((N^2 + 6N - 16) / 4)
  std::int64_t vorel_conjecture;  // N^2/4 + 3N/2 - 3
  std::int64_t b_series;          // N^2/4 + 2N - 9
  bool operator==(const BoundTriple&) const = default;
};

BoundTriple compare_bounds(std::uint32_t N);

}  // namespace zerosync
