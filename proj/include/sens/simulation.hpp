#pragma once

// Monte Carlo comparison of sampling strategies on nested populations.
//
// A run generates each macro-population once. Every study then draws
// `pops_per_study` research populations afresh from its macro-population
// (without replacement, equal split between the two groups), and from every
// research population one sample per condition. Each sample is tested with
// a one-tailed pooled-variance t test in the direction group 2 > group 1;
// a capture is a sample with p <= sig and d = 2t/√df > mes_threshold.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sens/rng.hpp"
#include "sens/sensitiveness.hpp"

namespace sens {

struct MacroPopulationSpec {
  std::int64_t group_size = 0;  // per group
  double mean1 = 10.0;
  double mean2 = 10.5;
  double sd = 1.0;
  friend bool operator==(const MacroPopulationSpec&, const MacroPopulationSpec&) = default;
};

struct Extraction {
  std::size_t macro_index = 0;
  std::int64_t population_size = 0;  // total, split equally between groups
  friend bool operator==(const Extraction&, const Extraction&) = default;
};

struct ConditionSpec {
  std::string name;
  std::int64_t total_n = 0;  // split equally between groups
  friend bool operator==(const ConditionSpec&, const ConditionSpec&) = default;
};

struct SimulationConfig {
  std::uint64_t seed = 1;
  std::vector<MacroPopulationSpec> macro_pops;
  // Study s uses extraction_plan[s % extraction_plan.size()].
  std::vector<Extraction> extraction_plan;
  int n_studies = 2;
  int pops_per_study = 43;
  std::vector<ConditionSpec> conditions;
  double sig = 0.05;
  Tails tails = Tails::One;
  double mes_threshold = 0.495;
  // Worker threads; 0 uses the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;

  // Macro-populations of 20,000 / 10,000 / 4,000 / 2,000 (10,000 .. 1,000 per
  // group), eight studies, PWR 102 / SNS 48 / THMB 30.
  static SimulationConfig paper_defaults();
  // Same design with macro group sizes capped at 2,000 and two studies.
  static SimulationConfig desk_defaults();

  // Throws ConfigError before any work is done.
  void validate() const;

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

struct GroupDescriptives {
  std::int64_t n1 = 0;
  double mean1 = 0.0;
  double sd1 = 0.0;
  std::int64_t n2 = 0;
  double mean2 = 0.0;
  double sd2 = 0.0;
  double d = 0.0;  // (mean2 - mean1) / pooled SD
  friend bool operator==(const GroupDescriptives&, const GroupDescriptives&) = default;
};

struct ConditionCount {
  std::string name;
  std::int64_t captures = 0;    // significant and d > mes_threshold
  std::int64_t significant = 0; // significant regardless of effect size
  friend bool operator==(const ConditionCount&, const ConditionCount&) = default;
};

struct StudyOutcome {
  int study_index = 0;
  std::size_t macro_index = 0;
  std::int64_t population_size = 0;
  GroupDescriptives macro;
  std::vector<ConditionCount> counts;
  std::vector<GroupDescriptives> population_descriptives;
  friend bool operator==(const StudyOutcome&, const StudyOutcome&) = default;
};

struct TTestResult {
  double t = 0.0;
  std::int64_t df = 0;
  double p_one_tailed = 0.0;  // P(T >= t), alternative group B > group A
  double d = 0.0;             // 2t / √df
  friend bool operator==(const TTestResult&, const TTestResult&) = default;
};

// Pooled-variance two-sample t test. Groups need at least two observations
// each; zero pooled variance throws DegenerateInputError.
TTestResult two_sample_t(std::span<const double> group_a, std::span<const double> group_b);

struct Population {
  std::vector<double> group1;
  std::vector<double> group2;
};

struct SampleAssessment {
  TTestResult test;
  bool significant = false;
  bool captured = false;
};

Population generate_macro_population(const MacroPopulationSpec& spec, Rng& rng);

// Population of `total_size` drawn without replacement, total_size / 2 per group.
Population draw_subpopulation(const Population& source, std::int64_t total_size, Rng& rng);

GroupDescriptives describe(const Population& population);

// Substream used for the sample of one condition.
Rng sample_stream(std::uint64_t seed, int study, int population, std::size_t condition);

// One sample per condition from `population`, with the substreams of
// (study, population_index).
std::vector<SampleAssessment> evaluate_population(const Population& population,
                                                  const SimulationConfig& config, int study,
                                                  int population_index);

std::vector<StudyOutcome> run_simulation(const SimulationConfig& config);

}  // namespace sens
