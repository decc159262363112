#include "sens/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sens/distributions.hpp"
#include "sens/errors.hpp"

namespace sens {
namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string roman(int n) {
  static const char* numerals[] = {"I",  "II",  "III",  "IV", "V",
                                   "VI", "VII", "VIII", "IX", "X"};
  if (n >= 1 && n <= 10) return numerals[n - 1];
  return std::to_string(n);
}

std::string pair_label(const std::string& a, const std::string& b) { return a + "-" + b; }

NamedCounts captures_of(const StudyOutcome& s) {
  NamedCounts out;
  for (const auto& c : s.counts) out.emplace_back(c.name, c.captures);
  return out;
}

StudySummary summarize_counts(std::string label, const NamedCounts& counts) {
  StudySummary s;
  s.label = std::move(label);
  s.captures = counts;
  const std::int64_t total = [&] {
    std::int64_t t = 0;
    for (const auto& [_, f] : counts) t += f;
    return t;
  }();
  if (total > 0) s.shares = condition_shares(counts);
  for (auto [i, j] : cyclic_pairs(counts.size())) {
    const auto& [name_i, f_i] = counts[i];
    const auto& [name_j, f_j] = counts[j];
    if (f_i + f_j > 0) s.comparisons.push_back(pairwise_gof(f_i, f_j, pair_label(name_i, name_j)));
  }
  return s;
}

}  // namespace

PairwiseComparison pairwise_gof(std::int64_t f1, std::int64_t f2, std::string label) {
  if (f1 < 0 || f2 < 0) throw DomainError("pairwise_gof: frequencies must be nonnegative");
  if (f1 + f2 == 0) throw DegenerateInputError("pairwise_gof: both frequencies are zero");
  const double total = static_cast<double>(f1 + f2);
  const double diff = static_cast<double>(f1 - f2);
  PairwiseComparison out;
  out.label = std::move(label);
  out.f1 = f1;
  out.f2 = f2;
  out.chi2 = diff * diff / total;
  out.w = std::sqrt(out.chi2 / total);
  out.p = sf(ChiSquare(1), out.chi2);
  return out;
}

NamedShares condition_shares(const NamedCounts& counts) {
  std::int64_t total = 0;
  for (const auto& [name, f] : counts) {
    if (f < 0) throw DomainError("condition_shares: counts must be nonnegative");
    total += f;
  }
  if (total == 0) throw DegenerateInputError("condition_shares: all counts are zero");
  NamedShares out;
  for (const auto& [name, f] : counts) {
    out.emplace_back(name, 100.0 * static_cast<double>(f) / static_cast<double>(total));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> cyclic_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n == 2) {
    out.emplace_back(0, 1);
  } else if (n > 2) {
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(i, (i + 1) % n);
  }
  return out;
}

std::vector<StudySummary> summarize(const std::vector<StudyOutcome>& outcomes) {
  std::vector<StudySummary> out;
  NamedCounts totals;
  for (const auto& s : outcomes) {
    const NamedCounts counts = captures_of(s);
    if (totals.empty()) {
      totals = counts;
      for (auto& [_, f] : totals) f = 0;
    }
    for (std::size_t i = 0; i < counts.size() && i < totals.size(); ++i) {
      totals[i].second += counts[i].second;
    }
    out.push_back(summarize_counts(roman(s.study_index + 1), counts));
  }
  out.push_back(summarize_counts("All studies", totals));
  return out;
}

std::string simulation_table_csv(const std::vector<StudyOutcome>& outcomes) {
  const std::vector<StudySummary> summaries = summarize(outcomes);
  std::ostringstream os;
  os << "Statistic";
  for (const auto& s : outcomes) os << "," << roman(s.study_index + 1);
  os << ",All studies\n";

  auto descriptive_row = [&](const std::string& name, auto getter) {
    os << name;
    for (const auto& s : outcomes) os << "," << getter(s);
    os << ",\n";
  };
  descriptive_row("N 1", [](const StudyOutcome& s) { return std::to_string(s.macro.n1); });
  descriptive_row("Mean 1", [](const StudyOutcome& s) { return fixed(s.macro.mean1, 2); });
  descriptive_row("SD 1", [](const StudyOutcome& s) { return fixed(s.macro.sd1, 2); });
  descriptive_row("N 2", [](const StudyOutcome& s) { return std::to_string(s.macro.n2); });
  descriptive_row("Mean 2", [](const StudyOutcome& s) { return fixed(s.macro.mean2, 2); });
  descriptive_row("SD 2", [](const StudyOutcome& s) { return fixed(s.macro.sd2, 2); });
  descriptive_row("d", [](const StudyOutcome& s) { return fixed(s.macro.d, 2); });
  descriptive_row("Research N",
                  [](const StudyOutcome& s) { return std::to_string(s.population_size); });

  const std::size_t n_conditions = outcomes.empty() ? 0 : outcomes.front().counts.size();
  for (std::size_t c = 0; c < n_conditions; ++c) {
    descriptive_row(outcomes.front().counts[c].name + " % sig", [&](const StudyOutcome& s) {
      const double pct = 100.0 * static_cast<double>(s.counts[c].significant) /
                         static_cast<double>(s.population_descriptives.size());
      return fixed(pct, 1);
    });
  }

  auto summary_row = [&](const std::string& name, auto getter) {
    os << name;
    for (const auto& s : summaries) os << "," << getter(s);
    os << "\n";
  };
  for (std::size_t c = 0; c < n_conditions; ++c) {
    summary_row("f " + outcomes.front().counts[c].name, [&](const StudySummary& s) {
      return std::to_string(s.captures[c].second);
    });
  }
  for (std::size_t c = 0; c < n_conditions; ++c) {
    summary_row("% " + outcomes.front().counts[c].name, [&](const StudySummary& s) {
      return s.shares.empty() ? std::string() : fixed(s.shares[c].second, 1);
    });
  }
  const auto pairs = cyclic_pairs(n_conditions);
  for (const auto& [i, j] : pairs) {
    const std::string label =
        pair_label(outcomes.front().counts[i].name, outcomes.front().counts[j].name);
    auto find = [&](const StudySummary& s) -> const PairwiseComparison* {
      for (const auto& cmp : s.comparisons) {
        if (cmp.label == label) return &cmp;
      }
      return nullptr;
    };
    summary_row("chi2 " + label, [&](const StudySummary& s) {
      const auto* cmp = find(s);
      return cmp ? fixed(cmp->chi2, 2) : std::string();
    });
    summary_row("w " + label, [&](const StudySummary& s) {
      const auto* cmp = find(s);
      return cmp ? fixed(cmp->w, 2) : std::string();
    });
  }
  return os.str();
}

namespace {

struct ComparisonRow {
  std::string condition;
  std::string sum_f;
  std::string share;
  std::string test;
  std::string w;
  std::string chi2;
  std::string p;
};

std::vector<ComparisonRow> comparison_rows(const std::vector<StudyOutcome>& outcomes) {
  const StudySummary all = summarize(outcomes).back();
  std::vector<ComparisonRow> rows;
  const std::size_t n = std::max(all.captures.size(), all.comparisons.size());
  for (std::size_t i = 0; i < n; ++i) {
    ComparisonRow row;
    if (i < all.captures.size()) {
      row.condition = all.captures[i].first;
      row.sum_f = std::to_string(all.captures[i].second);
      if (!all.shares.empty()) row.share = fixed(all.shares[i].second, 1);
    }
    if (i < all.comparisons.size()) {
      const auto& c = all.comparisons[i];
      row.test = c.label;
      row.w = fixed(c.w, 2);
      row.chi2 = fixed(c.chi2, 2);
      row.p = fixed(c.p, 2);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string comparison_table_csv(const std::vector<StudyOutcome>& outcomes) {
  std::ostringstream os;
  os << "Condition,Sum f,%,Test,w,chi2,p\n";
  for (const auto& r : comparison_rows(outcomes)) {
    os << r.condition << "," << r.sum_f << "," << r.share << "," << r.test << "," << r.w << ","
       << r.chi2 << "," << r.p << "\n";
  }
  return os.str();
}

std::string comparison_table_markdown(const std::vector<StudyOutcome>& outcomes) {
  std::ostringstream os;
  os << "| Condition | Σf | % | Test | w | χ² | p |\n";
  os << "|---|---:|---:|---|---:|---:|---:|\n";
  for (const auto& r : comparison_rows(outcomes)) {
    os << "| " << r.condition << " | " << r.sum_f << " | " << r.share << " | " << r.test << " | "
       << r.w << " | " << r.chi2 << " | " << r.p << " |\n";
  }
  return os.str();
}

}  // namespace sens
