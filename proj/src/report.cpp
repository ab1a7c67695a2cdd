#include "zerosync/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zerosync {

namespace {

std::uint64_t cerny_formula(std::uint32_t n) {
  return std::uint64_t(n - 1) * (n - 1);
}

std::uint64_t swap_chain_formula(std::uint32_t n) {
  return std::uint64_t(n) * (n - 1) / 2;
}

std::uint64_t martyugin_formula(std::uint32_t n) {
  return (std::uint64_t(n) * n + 6ull * n - 16 + 3) / 4;  // ceiling
}

std::uint64_t a_series_formula(std::uint32_t n) {
  return n == 8 ? 20 : 4ull * n - 13;
}

std::uint64_t b_series_formula(std::uint32_t N) {
  return (std::uint64_t(N) * N + 8ull * N - 36) / 4;  // N^2/4 + 2N - 9, N even
}

std::string family_label(Family family, std::uint32_t states) {
  return std::string(family_name(family)) + "(" + std::to_string(states) + ")";
}

ReportRow solved_row(const Dfa& dfa, Family family, std::uint64_t lower,
                     std::uint64_t formula, const SolverLimits& limits) {
  ReportRow row;
  row.family = family_label(family, dfa.state_count());
  row.states = dfa.state_count();
  row.rt_lower = lower;
  row.rt_formula = formula;
  const auto result = exact_reset_threshold(dfa, limits);
  if (result.status == SolveStatus::found) {
    row.rt_exact = result.threshold;
    row.status = result.threshold == formula ? RowStatus::match : RowStatus::mismatch;
  } else {
    row.status = RowStatus::skipped;
  }
  return row;
}

}  // namespace

TailLemmaCheck check_tail_lemma(const Dfa& base, const TailSpec& tail,
                                const SolverLimits& limits) {
  std::string why;
  const auto profile = almost_permutation_profile(base, &why);
  if (!profile) {
    throw std::invalid_argument("base is not an almost-permutation automaton: " + why);
  }
  if (!is_synchronizing(base)) {
    throw std::invalid_argument("base automaton is not synchronizing");
  }
  if (tail.perm_letter != profile->perm_letter) {
    throw std::invalid_argument("the tail must be walked by the permutation letter");
  }
  if (tail.r != profile->pre_sink) {
    throw std::invalid_argument("the tail must re-enter at the pre-sink state");
  }
  const auto order = letter_order(base, profile->perm_letter);
  if (!order || tail.k % *order != 0) {
    throw std::invalid_argument(
        "tail length " + std::to_string(tail.k) +
        " must be a multiple of the permutation letter's order " +
        (order ? std::to_string(*order) : std::string("?")));
  }

  const auto base_result = exact_reset_threshold(base, limits);
  if (base_result.status != SolveStatus::found) {
    throw std::runtime_error("solver limit hit on the base automaton");
  }
  const Dfa tailed = tail_append(base, tail);
  const auto tailed_result = exact_reset_threshold(tailed, limits);
  if (tailed_result.status != SolveStatus::found) {
    throw std::runtime_error("solver limit hit on the tail extension");
  }

  TailLemmaCheck check;
  check.rt_base = base_result.threshold;
  check.rt_tailed = tailed_result.threshold;
  check.predicted =
      predict_tailed_rt(base_result.threshold, base.state_count(), tail.k);
  check.holds = check.rt_tailed == check.predicted;
  check.base_states = base.state_count();
  check.tail_length = tail.k;
  return check;
}

TailLemmaCheck check_tail_lemma(const Dfa& base, std::uint32_t k,
                                const SolverLimits& limits) {
  std::string why;
  const auto profile = almost_permutation_profile(base, &why);
  if (!profile) {
    throw std::invalid_argument("base is not an almost-permutation automaton: " + why);
  }
  return check_tail_lemma(base, TailSpec{k, profile->pre_sink, profile->perm_letter},
                          limits);
}

std::string_view row_status_name(RowStatus status) {
  switch (status) {
    case RowStatus::match:
      return "match";
    case RowStatus::bound_only:
      return "bound-only";
    case RowStatus::mismatch:
      return "mismatch";
    case RowStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::vector<ReportRow> threshold_report(const ReportOptions& options) {
  if (options.max_n < 7) {
    throw std::invalid_argument("threshold report needs max_n >= 7, got " +
                                std::to_string(options.max_n));
  }
  std::vector<ReportRow> rows;

  for (std::uint32_t n = 3; n <= 8; ++n) {
    rows.push_back(solved_row(cerny(n), Family::cerny, cerny_formula(n),
                              cerny_formula(n), options.limits));
  }
  for (std::uint32_t n = 3; n <= 8; ++n) {
    rows.push_back(solved_row(swap_chain(n), Family::swap_chain,
                              swap_chain_formula(n), swap_chain_formula(n),
                              options.limits));
  }
  for (std::uint32_t m = 4; m <= 6; ++m) {
    rows.push_back(solved_row(martyugin(m), Family::martyugin,
                              martyugin_formula(2 * m), martyugin_formula(2 * m),
                              options.limits));
  }
  for (std::uint32_t n = 7; n <= options.max_n; ++n) {
    rows.push_back(solved_row(a_series(n), Family::a_series, 4ull * n - 13,
                              a_series_formula(n), options.limits));
  }

  rows.push_back(solved_row(b_series(16), Family::b_series, b_series_formula(16),
                            b_series_formula(16), options.limits));

  // The 28-state member: value derived from the exact base threshold through
  // the tail rule; solved directly only on request.
  {
    ReportRow row;
    row.family = family_label(Family::b_series, 28);
    row.states = 28;
    row.rt_formula = b_series_formula(28);
    const Dfa base = a_series(16);
    const auto base_result = exact_reset_threshold(base, options.limits);
    if (base_result.status == SolveStatus::found) {
      row.rt_lower = predict_tailed_rt(base_result.threshold, 16, 12);
      row.status = RowStatus::bound_only;
      if (options.exact_tails) {
        const auto exact = exact_reset_threshold(b_series(28), options.limits);
        if (exact.status == SolveStatus::found) {
          row.rt_exact = exact.threshold;
          row.status = exact.threshold == row.rt_formula ? RowStatus::match
                                                         : RowStatus::mismatch;
        }
      }
    } else {
      row.status = RowStatus::skipped;
    }
    rows.push_back(row);
  }

  return rows;
}

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << "family,states,rt_exact,rt_lower,rt_formula,status\n";
  for (const auto& row : rows) {
    out << row.family << ',' << row.states << ',';
    if (row.rt_exact) out << *row.rt_exact;
    out << ',' << row.rt_lower << ',' << row.rt_formula << ','
        << row_status_name(row.status) << '\n';
  }
}

void write_report_table(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << std::left << std::setw(18) << "family" << std::right << std::setw(7)
      << "states" << std::setw(7) << "exact" << std::setw(7) << "lower"
      << std::setw(9) << "formula" << "  status\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(18) << row.family << std::right << std::setw(7)
        << row.states << std::setw(7)
        << (row.rt_exact ? std::to_string(*row.rt_exact) : std::string("-"))
        << std::setw(7) << row.rt_lower << std::setw(9) << row.rt_formula << "  "
        << row_status_name(row.status) << '\n';
  }
}

BoundTriple compare_bounds(std::uint32_t N) {
  if (N < 8) {
    throw std::invalid_argument("bound comparison needs N >= 8, got " +
                                std::to_string(N));
  }
  const std::int64_t n = N;
  BoundTriple t;
  t.martyugin = (n * n + 6 * n - 16 + 3) / 4;  // ceiling
  t.vorel_conjecture = (n * n + 6 * n - 12) / 4;
  t.b_series = (n * n + 8 * n - 36) / 4;
  return t;
}

}  // namespace zerosync
