#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sens/errors.hpp"
#include "sens/simulation.hpp"

using namespace sens;

namespace {

SimulationConfig small_config() {
  SimulationConfig c = SimulationConfig::desk_defaults();
  c.seed = 2024;
  c.pops_per_study = 12;
  return c;
}

}  // namespace

TEST(TwoSampleT, HandComputedCase) {
  const std::vector<double> a{0.0, 1.0}, b{2.0, 3.0};
  const TTestResult r = two_sample_t(a, b);
  EXPECT_NEAR(r.t, 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_EQ(r.df, 2);
  EXPECT_NEAR(r.d, 4.0, 1e-14);
  // One-tailed p for t(2) at 2√2: 0.5·(1 - t/√(t²+2)).
  EXPECT_NEAR(r.p_one_tailed, 0.5 * (1.0 - r.t / std::sqrt(r.t * r.t + 2.0)), 1e-14);
}

TEST(TwoSampleT, EqualGroups) {
  const std::vector<double> a{1.0, 4.0, 2.5, 7.0};
  const TTestResult r = two_sample_t(a, a);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_EQ(r.p_one_tailed, 0.5);
  EXPECT_EQ(r.d, 0.0);
}

TEST(TwoSampleT, Errors) {
  const std::vector<double> one{1.0}, two{1.0, 2.0}, flat{3.0, 3.0};
  EXPECT_THROW(two_sample_t(one, two), DomainError);
  EXPECT_THROW(two_sample_t(flat, flat), DegenerateInputError);
}

TEST(TwoSampleT, NullPValuesAreUniform) {
  Rng rng(31337);
  const int reps = 100000;
  std::vector<double> p(reps), a(24), b(24);
  for (int i = 0; i < reps; ++i) {
    for (auto& x : a) x = rng.normal();
    for (auto& x : b) x = rng.normal();
    p[i] = two_sample_t(a, b).p_one_tailed;
  }
  std::sort(p.begin(), p.end());
  double ks = 0.0;
  for (int i = 0; i < reps; ++i) {
    ks = std::max({ks, (i + 1.0) / reps - p[i], p[i] - static_cast<double>(i) / reps});
  }
  // Asymptotic Kolmogorov critical value at the 0.1% level.
  EXPECT_LT(ks, 1.9495 / std::sqrt(static_cast<double>(reps)));
}

TEST(Config, DefaultsMirrorDesign) {
  const SimulationConfig p = SimulationConfig::paper_defaults();
  ASSERT_EQ(p.macro_pops.size(), 4u);
  EXPECT_EQ(p.macro_pops[0].group_size, 10000);
  EXPECT_EQ(p.macro_pops[3].group_size, 1000);
  EXPECT_EQ(p.macro_pops[0].mean1, 10.0);
  EXPECT_EQ(p.macro_pops[0].mean2, 10.5);
  EXPECT_EQ(p.macro_pops[0].sd, 1.0);
  EXPECT_EQ(p.n_studies, 8);
  EXPECT_EQ(p.pops_per_study, 43);
  ASSERT_EQ(p.conditions.size(), 3u);
  EXPECT_EQ(p.conditions[0].total_n, 102);
  EXPECT_EQ(p.conditions[1].total_n, 48);
  EXPECT_EQ(p.conditions[2].total_n, 30);
  EXPECT_EQ(p.sig, 0.05);
  EXPECT_EQ(p.mes_threshold, 0.495);
  EXPECT_NO_THROW(p.validate());
  const SimulationConfig d = SimulationConfig::desk_defaults();
  EXPECT_EQ(d.n_studies, 2);
  for (const auto& m : d.macro_pops) EXPECT_LE(m.group_size, 2000);
  EXPECT_NO_THROW(d.validate());
}

TEST(Config, ValidationRejectsOversizedSamples) {
  SimulationConfig c = small_config();
  c.conditions.push_back({"BIG", 3000});
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(run_simulation(c), ConfigError);
  c = small_config();
  c.conditions[0].total_n = 101;
  EXPECT_THROW(c.validate(), ConfigError);
  c = small_config();
  c.extraction_plan[0].macro_index = 9;
  EXPECT_THROW(c.validate(), ConfigError);
  c = small_config();
  c.extraction_plan[0].population_size = 50000;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Simulation, DeterministicAcrossThreadCounts) {
  SimulationConfig c = small_config();
  c.threads = 1;
  const auto a = run_simulation(c);
  c.threads = 4;
  const auto b = run_simulation(c);
  EXPECT_EQ(a, b);
  c.seed += 1;
  EXPECT_NE(run_simulation(c), a);
}

TEST(Simulation, OutcomeShape) {
  const SimulationConfig c = small_config();
  const auto outcomes = run_simulation(c);
  ASSERT_EQ(outcomes.size(), 2u);
  for (const auto& o : outcomes) {
    EXPECT_EQ(o.population_descriptives.size(), 12u);
    EXPECT_EQ(o.macro_index, c.extraction_plan[static_cast<std::size_t>(o.study_index)].macro_index);
    ASSERT_EQ(o.counts.size(), 3u);
    for (const auto& n : o.counts) {
      EXPECT_LE(n.captures, n.significant);
      EXPECT_LE(n.significant, c.pops_per_study);
      EXPECT_GE(n.captures, 0);
    }
    for (const auto& d : o.population_descriptives) {
      EXPECT_EQ(d.n1 + d.n2, o.population_size);
    }
  }
}

TEST(Simulation, CaptureRuleHoldsPerSample) {
  const SimulationConfig c = small_config();
  Rng rng(3);
  const Population macro = generate_macro_population(c.macro_pops[2], rng);
  for (int pop = 0; pop < 30; ++pop) {
    const Population p = draw_subpopulation(macro, 1000, rng);
    for (const auto& s : evaluate_population(p, c, 0, pop)) {
      EXPECT_EQ(s.significant, s.test.p_one_tailed <= c.sig);
      EXPECT_EQ(s.captured, s.test.p_one_tailed <= c.sig && s.test.d > c.mes_threshold);
    }
  }
}

TEST(Simulation, BruteForceOracleOnFixedPopulation) {
  const SimulationConfig c = small_config();
  Rng rng(77);
  const Population macro = generate_macro_population({3000, 10.0, 10.5, 1.0}, rng);
  const Population population = draw_subpopulation(macro, 2000, rng);
  for (int pop = 0; pop < 20; ++pop) {
    const auto assessed = evaluate_population(population, c, 1, pop);
    for (std::size_t k = 0; k < c.conditions.size(); ++k) {
      // Same substream, so the same sample; recompute the test from sums.
      Rng s = sample_stream(c.seed, 1, pop, k);
      const Population sample = draw_subpopulation(population, c.conditions[k].total_n, s);
      long double s1 = 0, q1 = 0, s2 = 0, q2 = 0;
      for (double x : sample.group1) { s1 += x; q1 += static_cast<long double>(x) * x; }
      for (double x : sample.group2) { s2 += x; q2 += static_cast<long double>(x) * x; }
      const long double n1 = sample.group1.size(), n2 = sample.group2.size();
      const long double ss = (q1 - s1 * s1 / n1) + (q2 - s2 * s2 / n2);
      const long double df = n1 + n2 - 2;
      const long double t = (s2 / n2 - s1 / n1) / std::sqrt(ss / df * (1 / n1 + 1 / n2));
      const auto& a = assessed[k].test;
      EXPECT_NEAR(a.t, static_cast<double>(t), 1e-9);
      const double d = static_cast<double>(2 * t / std::sqrt(df));
      // p from the t distribution at the recomputed statistic, via the critical value.
      const bool significant = a.p_one_tailed <= c.sig;
      EXPECT_EQ(assessed[k].captured, significant && d > c.mes_threshold);
    }
  }
}

TEST(Simulation, NullCalibration) {
  // 4 studies x 43 populations x 3 conditions x 20 seeds = 10,320 tests.
  SimulationConfig c = SimulationConfig::desk_defaults();
  c.n_studies = 4;
  for (auto& m : c.macro_pops) m.mean2 = m.mean1;
  std::int64_t significant = 0, captures = 0, tests = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    c.seed = seed;
    for (const auto& o : run_simulation(c)) {
      for (const auto& n : o.counts) {
        significant += n.significant;
        captures += n.captures;
        tests += c.pops_per_study;
      }
    }
  }
  ASSERT_GE(tests, 10000);
  const double rate = static_cast<double>(significant) / static_cast<double>(tests);
  const double se = std::sqrt(0.05 * 0.95 / static_cast<double>(tests));
  EXPECT_NEAR(rate, 0.05, 3 * se);
  EXPECT_LE(captures, significant);
}

TEST(Subpopulation, WithoutReplacement) {
  Population src;
  for (int i = 0; i < 100; ++i) {
    src.group1.push_back(i);
    src.group2.push_back(1000 + i);
  }
  Rng rng(8);
  const Population p = draw_subpopulation(src, 120, rng);
  ASSERT_EQ(p.group1.size(), 60u);
  std::vector<double> g = p.group1;
  std::sort(g.begin(), g.end());
  EXPECT_EQ(std::adjacent_find(g.begin(), g.end()), g.end());
  EXPECT_THROW(draw_subpopulation(src, 202, rng), ConfigError);
  EXPECT_THROW(draw_subpopulation(src, 11, rng), ConfigError);
}
