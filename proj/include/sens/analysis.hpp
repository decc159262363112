#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sens/simulation.hpp"

namespace sens {

// Two-cell goodness-of-fit χ² with equal expected frequencies, its effect
// size w and upper-tail p on 1 df. No continuity correction.
struct PairwiseComparison {
  std::string label;
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;
  double chi2 = 0.0;
  double w = 0.0;
  double p = 1.0;
  friend bool operator==(const PairwiseComparison&, const PairwiseComparison&) = default;
};

PairwiseComparison pairwise_gof(std::int64_t f1, std::int64_t f2, std::string label = {});

using NamedCounts = std::vector<std::pair<std::string, std::int64_t>>;
using NamedShares = std::vector<std::pair<std::string, double>>;

// Each condition's share of the total, in percent.
NamedShares condition_shares(const NamedCounts& counts);

// Pairs compared cyclically: (c0, c1), (c1, c2), ..., (c_last, c0); two
// conditions give a single pair.
std::vector<std::pair<std::size_t, std::size_t>> cyclic_pairs(std::size_t n_conditions);

struct StudySummary {
  std::string label;  // study number or "All studies"
  NamedCounts captures;
  NamedShares shares;
  std::vector<PairwiseComparison> comparisons;
};

// Per-study summaries followed by the aggregate over all studies.
std::vector<StudySummary> summarize(const std::vector<StudyOutcome>& outcomes);

// Layout of the simulation tables: one row per statistic, one column per
// study (plus "All studies" for the frequency rows).
std::string simulation_table_csv(const std::vector<StudyOutcome>& outcomes);
// Condition / Σf / % / pair / w / χ² / p, aggregated over all studies.
std::string comparison_table_csv(const std::vector<StudyOutcome>& outcomes);
std::string comparison_table_markdown(const std::vector<StudyOutcome>& outcomes);

}  // namespace sens
